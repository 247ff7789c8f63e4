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

#include "bulab/nse/exact_flows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bulab/field/bumps.hpp"
#include "bulab/spectral/operators.hpp"

namespace bulab::nse {

VectorField shear_flow(const Grid& grid, double t) {
  VectorField u(grid);
  const double decay = std::exp(-t);
  u[0] = ScalarField::sample(grid, [decay](const Point& x) { return decay * std::sin(x[1]); });
  return u;
}

VectorField random_solenoidal_field(const Grid& grid, double amplitude, std::uint64_t seed) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int dim = grid.dim();
  const double base = 2.0 * std::numbers::pi / grid.box_length();
  VectorField u(grid);
  for (int i = 0; i < dim; ++i) {
    for (int p = 1; p <= 2; ++p) {
      for (int q = 1; q <= 2; ++q) {
        for (int r = 0; r <= (dim == 3 ? 1 : 0); ++r) {
          const double ca = normal(rng);
          const double cb = normal(rng);
          for (std::size_t idx = 0; idx < grid.size(); ++idx) {
            const Point x = grid.point(idx);
            u[i][idx] += ca * std::sin(base * (p * x[0] + q * x[1] + r * x[2])) +
                         cb * std::cos(base * (q * x[0] - r * x[1] + p * x[2]));
          }
        }
      }
    }
  }
  u = spectral::leray_project(u);
  u *= amplitude / u.max_magnitude();
  return u;
}

ScalarProfile cubic_vanishing_profile(double final_time, double t_on, double ramp) {
  if (!(ramp > 0.0) || !(t_on + ramp < final_time)) {
    throw std::invalid_argument("switch-on window must end before the final time");
  }
  ScalarProfile p;
  p.final_time = final_time;
  p.value = [=](double t) {
    const double d = final_time - t;
    return d * d * d * smooth_step((t - t_on) / ramp);
  };
  p.derivative = [=](double t) {
    const double d = final_time - t;
    const double s = (t - t_on) / ramp;
    return -3.0 * d * d * smooth_step(s) + d * d * d * smooth_step_derivative(s) / ramp;
  };
  return p;
}

Example13Report example_1_3_residual(const ScalarProfile& h, std::span<const SpaceTimePoint> samples,
                                     double pressure_scale) {
  Example13Report r;
  r.samples = static_cast<int>(samples.size());
  for (const SpaceTimePoint& s : samples) {
    const double hv = h.value(s.t);
    const double dh = h.derivative(s.t);
    // u = (h, 0, 0) is spatially constant: every spatial derivative of u is 0.
    const double du_dx1 = 0.0;
    const double lap_u1 = 0.0;
    const double dp_dx1 = -pressure_scale * dh;
    const double res1 = dh + hv * du_dx1 - lap_u1 + dp_dx1;
    // Components 2 and 3: u_i = 0 and d_i p = 0.
    const double res23 = 0.0;
    r.max_residual = std::max({r.max_residual, std::abs(res1), res23});
    r.max_abs_derivative = std::max(r.max_abs_derivative, std::abs(dh));
    if (s.t < h.final_time && hv != 0.0) r.nontrivial_before = true;
  }
  r.vanishes_at_final_time = h.value(h.final_time) == 0.0 && h.derivative(h.final_time) == 0.0;
  return r;
}

}  // namespace bulab::nse
