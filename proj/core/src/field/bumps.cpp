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

#include "bulab/field/bumps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bulab {
namespace {

// exp(-1/(1-s)) for s in [0,1), 0 otherwise.
double bump_profile(double s) noexcept {
  if (s >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s));
}

}  // namespace

double TemporalBump::operator()(double t) const noexcept {
  const double z = (t - center) / halfwidth;
  return amplitude * bump_profile(z * z);
}

double BumpSpec::spatial_value(const Point& x, int dim) const noexcept {
  double r2 = 0.0;
  for (int d = 0; d < dim; ++d) r2 += (x[d] - center[d]) * (x[d] - center[d]);
  return amplitude * bump_profile(r2 / (radius * radius));
}

void BumpSpec::check_inside(const Grid& grid) const {
  if (!(radius > 0.0)) throw DomainError("bump radius must be positive");
  const double half = 0.5 * grid.box_length();
  for (int d = 0; d < grid.dim(); ++d) {
    // The lattice touches -L/2 but not +L/2; demand strict clearance on both sides.
    if (!(center[d] - radius > -half) || !(center[d] + radius < half - grid.spacing()))
      throw DomainError("bump support touches the periodic box boundary");
  }
}

void BumpSpec::check_inside(const TimeGrid& time_grid) const {
  if (!time) throw std::invalid_argument("bump has no temporal factor");
  if (!(time->halfwidth > 0.0)) throw DomainError("temporal halfwidth must be positive");
  if (!(time->center - time->halfwidth > time_grid.t_minus()) ||
      !(time->center + time->halfwidth < time_grid.t_plus()))
    throw DomainError("temporal bump support must lie strictly inside (T-, T+)");
}

ScalarField make_bump(const BumpSpec& spec, const Grid& grid) {
  spec.check_inside(grid);
  const int dim = grid.dim();
  return ScalarField::sample(grid, [&](const Point& x) { return spec.spatial_value(x, dim); });
}

std::vector<double> temporal_profile(const TemporalBump& bump, const TimeGrid& time_grid) {
  std::vector<double> profile(static_cast<std::size_t>(time_grid.frames()));
  for (int m = 0; m < time_grid.frames(); ++m) profile[m] = bump(time_grid.time(m));
  return profile;
}

SpaceTimeField make_spacetime_bump(const BumpSpec& spec, const Grid& grid, const TimeGrid& time_grid) {
  spec.check_inside(time_grid);
  const ScalarField spatial = make_bump(spec, grid);
  const std::vector<double> profile = temporal_profile(*spec.time, time_grid);
  SpaceTimeField out(grid, time_grid);
  for (int m = 0; m < time_grid.frames(); ++m) {
    if (profile[m] != 0.0) out.frame(m).add_scaled(profile[m], spatial);
  }
  return out;
}

BumpSpec random_spatial_bump(std::mt19937_64& rng, const Grid& grid, const BumpSampling& sampling) {
  const double half = 0.5 * grid.box_length() - grid.spacing() - sampling.box_margin;
  if (!(half > sampling.min_radius)) throw DomainError("box too small for the requested bump radii");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BumpSpec spec;
  const double max_r = std::min(sampling.max_radius, 0.9 * half);
  spec.radius = sampling.min_radius + (max_r - sampling.min_radius) * unit(rng);
  spec.amplitude = sampling.min_amplitude + (sampling.max_amplitude - sampling.min_amplitude) * unit(rng);
  const double reach = half - spec.radius;
  for (int d = 0; d < grid.dim(); ++d) spec.center[d] = reach * (2.0 * unit(rng) - 1.0);
  return spec;
}

BumpSpec random_bump(std::mt19937_64& rng, const Grid& grid, const TimeGrid& time_grid,
                     const BumpSampling& sampling) {
  BumpSpec spec = random_spatial_bump(rng, grid, sampling);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double window = time_grid.t_plus() - time_grid.t_minus();
  TemporalBump tb;
  tb.halfwidth = window * (sampling.min_halfwidth_fraction +
                           (sampling.max_halfwidth_fraction - sampling.min_halfwidth_fraction) * unit(rng));
  // Keep a one-step clearance so the end frames are exactly zero.
  const double lo = time_grid.t_minus() + tb.halfwidth + time_grid.dt();
  const double hi = time_grid.t_plus() - tb.halfwidth - time_grid.dt();
  tb.center = hi > lo ? lo + (hi - lo) * unit(rng) : 0.5 * (time_grid.t_minus() + time_grid.t_plus());
  tb.amplitude = 1.0;
  spec.time = tb;
  spec.check_inside(time_grid);
  return spec;
}

double smooth_step(double s) noexcept {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double f = std::exp(-1.0 / s);
  const double g = std::exp(-1.0 / (1.0 - s));
  return f / (f + g);
}

double smooth_step_derivative(double s) noexcept {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double f = std::exp(-1.0 / s);
  const double g = std::exp(-1.0 / (1.0 - s));
  const double sum = f + g;
  return f * g * (1.0 / (s * s) + 1.0 / ((1.0 - s) * (1.0 - s))) / (sum * sum);
}

}  // namespace bulab
