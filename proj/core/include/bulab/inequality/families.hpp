// Copyright 2026 The bulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bulab/field/bumps.hpp"
#include "bulab/field/fields.hpp"

namespace bulab::inequality {

struct FamilyMember {
  std::string id;
  SpaceTimeField u;
};

struct FamilyOptions {
  int superpositions = 10;
  int bumps_per_superposition = 3;
  int separable = 3;
  int near_caloric = 1;
  BumpSampling sampling{};
};

/// Seeded test family for the space-time estimate:
///   "mix-i"  sums of random space-time bumps,
///   "sep-i"  phi(t) b(x) with independent temporal and spatial bumps,
///   "cal-i"  chi(t) e^{(T+ - t) Delta} b, so d_t u + Delta u = chi' e^{(T+ - t) Delta} b
///            is small wherever the plateau chi is flat.
std::vector<FamilyMember> standard_family(const Grid& grid, const TimeGrid& time_grid,
                                          std::uint64_t seed, const FamilyOptions& options = {});

/// Plateau equal to 1 on [t0 + ramp, t1 - ramp], 0 outside (t0, t1).
double plateau(double t, double t0, double t1, double ramp) noexcept;

/// eta(x/m) with eta = 1 on |x| <= 1 and 0 on |x| >= 2.
ScalarField radial_cutoff(const Grid& grid, double m);

/// Smoothed indicator: 1 on |x| <= R, 0 on |x| >= R + width.
ScalarField plateau_field(const Grid& grid, double radius, double width);

/// sum_p S_p b_p(x) with symmetric coefficient matrices S_p (row-major,
/// dim x dim) and spatial bumps b_p.
struct TensorBumpSpec {
  std::vector<BumpSpec> bumps;
  std::vector<std::vector<double>> coefficients;
};

/// Seeded random specs; grid sets the admissible centers and radii.
std::vector<TensorBumpSpec> tensor_bump_specs(const Grid& grid, int count, std::uint64_t seed,
                                              const BumpSampling& sampling = {});
TensorField make_tensor(const TensorBumpSpec& spec, const Grid& grid);

std::vector<TensorField> tensor_bump_family(const Grid& grid, int count, std::uint64_t seed,
                                            const BumpSampling& sampling = {});

}  // namespace bulab::inequality
