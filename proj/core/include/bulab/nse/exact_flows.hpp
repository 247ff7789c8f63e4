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
#include <functional>
#include <span>

#include "bulab/field/fields.hpp"

namespace bulab::nse {

/// (e^{-t} sin x2, 0, 0, ...): an exact solution on [-pi, pi)^dim because
/// (u . grad) u vanishes identically.
VectorField shear_flow(const Grid& grid, double t);

/// Leray projection of seeded low-mode trigonometric data (wavenumbers 1
/// and 2 in units of 2 pi / L), scaled to max |u| = amplitude.
VectorField random_solenoidal_field(const Grid& grid, double amplitude, std::uint64_t seed);

/// Closed-form scalar h with its derivative.
struct ScalarProfile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double final_time = 1.0;
};

/// h(t) = (T - t)^3 chi(t) with a smooth switch-on chi rising over
/// [t_on, t_on + ramp]; h(T) = h'(T) = 0 and h > 0 on (t_on, T).
ScalarProfile cubic_vanishing_profile(double final_time, double t_on = 0.0, double ramp = 0.25);

struct SpaceTimePoint {
  Point x;
  double t = 0.0;
};

struct Example13Report {
  double max_residual = 0.0;
  double max_abs_derivative = 0.0;  ///< max |h'| over the samples
  bool vanishes_at_final_time = false;
  bool nontrivial_before = false;
  int samples = 0;
};

/// u = (h(t), 0, 0), p = -pressure_scale h'(t) x1: evaluates the momentum
/// residual d_t u + (u . grad) u - Delta u + grad p componentwise from the
/// closed forms. pressure_scale = 1 is the exact solution.
Example13Report example_1_3_residual(const ScalarProfile& h, std::span<const SpaceTimePoint> samples,
                                     double pressure_scale = 1.0);

}  // namespace bulab::nse
