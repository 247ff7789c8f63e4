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
#include <optional>
#include <random>
#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/field/grid.hpp"

namespace bulab {

/// 1-D bump amplitude * exp(-1 / (1 - ((t - center) / halfwidth)^2)).
struct TemporalBump {
  double center = 0.06;
  double halfwidth = 0.03;
  double amplitude = 1.0;

  double operator()(double t) const noexcept;
};

/// Compactly supported C^infinity bump on a ball, optionally with a
/// temporal factor for space-time fields.
struct BumpSpec {
  Point center{0.0, 0.0, 0.0};
  double radius = 1.0;
  double amplitude = 1.0;
  std::optional<TemporalBump> time;

  /// Continuum value at x (spatial factor only).
  double spatial_value(const Point& x, int dim) const noexcept;
  /// Throws DomainError unless the ball sits strictly inside the box.
  void check_inside(const Grid& grid) const;
  /// Throws DomainError unless the temporal support sits strictly inside (T-, T+).
  void check_inside(const TimeGrid& time_grid) const;
};

/// amplitude * exp(-1/(1 - |x-c|^2/r^2)) inside the ball, 0 outside.
ScalarField make_bump(const BumpSpec& spec, const Grid& grid);

/// Temporal factor sampled on the time lattice; requires spec.time.
std::vector<double> temporal_profile(const TemporalBump& bump, const TimeGrid& time_grid);

/// Product of the spatial bump and its temporal bump; first and last frames vanish.
SpaceTimeField make_spacetime_bump(const BumpSpec& spec, const Grid& grid, const TimeGrid& time_grid);

/// C^infinity step: 0 for s <= 0, 1 for s >= 1.
double smooth_step(double s) noexcept;
double smooth_step_derivative(double s) noexcept;

/// Ranges for randomized bumps.
struct BumpSampling {
  double min_radius = 1.0;
  double max_radius = 2.0;
  double min_amplitude = 0.5;
  double max_amplitude = 1.5;
  /// Gap kept between the ball and the box boundary.
  double box_margin = 0.25;
  double min_halfwidth_fraction = 0.30;  ///< of (T+ - T-)
  double max_halfwidth_fraction = 0.45;
};

/// Draws a bump whose supports fit strictly inside the box and the time window.
BumpSpec random_bump(std::mt19937_64& rng, const Grid& grid, const TimeGrid& time_grid,
                     const BumpSampling& sampling = {});
/// Spatial-only variant.
BumpSpec random_spatial_bump(std::mt19937_64& rng, const Grid& grid, const BumpSampling& sampling = {});

}  // namespace bulab
