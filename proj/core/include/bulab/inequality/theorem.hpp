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

#include <span>
#include <string>
#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/field/log_scalar.hpp"
#include "bulab/field/weights.hpp"
#include "bulab/inequality/families.hpp"

namespace bulab::inequality {

/// Per-frame spatial integrals of u^2, |grad u|^2 and |d_t u + Delta u|^2
/// against (1+|x|^2)^{-exponent}. They do not depend on a, so one set
/// serves a whole sweep.
struct FrameIntegrals {
  TimeGrid time_grid;
  std::vector<double> u2;
  std::vector<double> grad2;
  std::vector<double> heat2;
};

FrameIntegrals frame_integrals(const SpaceTimeField& u, double spatial_exponent);

/// int h^{-(2a+1)} w ((a+1) u^2 + |grad u|^2), trapezoid in time.
LogScalar theorem_lhs(const FrameIntegrals& f, double a);
/// int h^{-2a} w |d_t u + Delta u|^2.
LogScalar theorem_rhs(const FrameIntegrals& f, double a);

LogScalar theorem_lhs(const SpaceTimeField& u, const WeightParams& params);
LogScalar theorem_rhs(const SpaceTimeField& u, const WeightParams& params);

struct RatioRow {
  std::string member;
  double a = 0.0;
  double k = 0.0;
  LogScalar lhs;
  LogScalar rhs;
  double ratio = 0.0;
  int grid_points = 0;
  int time_steps = 0;
  bool log_domain = false;
};

struct RatioReport {
  std::string family;
  ExponentConvention convention = ExponentConvention::kSingle;
  std::vector<RatioRow> rows;
  std::vector<std::string> skipped;  ///< members with rhs == 0
  double c_emp = 0.0;                ///< max ratio over rows

  /// For each member, lhs is non-decreasing along increasing a.
  bool lhs_monotone_in_a() const;
  bool all_finite() const;
};

RatioReport theorem_ratio_sweep(const std::vector<FamilyMember>& family, std::span<const double> a_values,
                                double k, ExponentConvention convention = ExponentConvention::kSingle,
                                std::string family_name = "standard");

}  // namespace bulab::inequality
