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

#include "bulab/field/grid.hpp"

#include <cmath>
#include <string>

namespace bulab {

Grid::Grid(int dim, int n, double length)
    : dim_(dim), n_(n), length_(length), spacing_(length / n) {
  cell_volume_ = std::pow(spacing_, dim_);
  size_ = 1;
  for (int d = 0; d < dim_; ++d) size_ *= static_cast<std::size_t>(n_);
}

Grid Grid::make(int dim, int points_per_axis, double box_length) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("grid dimension must be 2 or 3, got " + std::to_string(dim));
  if (points_per_axis < 8 || points_per_axis % 2 != 0)
    throw std::invalid_argument("points per axis must be even and >= 8, got " +
                                std::to_string(points_per_axis));
  if (!(box_length > 0.0) || !std::isfinite(box_length))
    throw std::invalid_argument("box length must be positive and finite");
  return Grid(dim, points_per_axis, box_length);
}

LatticeIndex Grid::unravel(std::size_t linear) const noexcept {
  LatticeIndex idx{0, 0, 0};
  for (int d = dim_ - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(linear % n_);
    linear /= n_;
  }
  return idx;
}

std::size_t Grid::ravel(const LatticeIndex& idx) const noexcept {
  std::size_t linear = 0;
  for (int d = 0; d < dim_; ++d) linear = linear * n_ + static_cast<std::size_t>(idx[d]);
  return linear;
}

Point Grid::point(std::size_t linear) const noexcept {
  const LatticeIndex idx = unravel(linear);
  Point x{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d) x[d] = coordinate(idx[d]);
  return x;
}

TimeGrid::TimeGrid(double t_minus, double t_plus, int steps)
    : t_minus_(t_minus), t_plus_(t_plus), steps_(steps), dt_((t_plus - t_minus) / steps) {}

TimeGrid TimeGrid::make(double t_minus, double t_plus, int steps, double max_t_plus) {
  if (!(t_minus > 0.0) || !(t_plus > t_minus))
    throw std::invalid_argument("time grid requires 0 < T- < T+");
  if (t_plus > max_t_plus)
    throw std::invalid_argument("T+ = " + std::to_string(t_plus) + " exceeds the horizon bound " +
                                std::to_string(max_t_plus));
  if (steps < 2) throw std::invalid_argument("time grid needs at least 2 steps");
  return TimeGrid(t_minus, t_plus, steps);
}

TimeGrid TimeGrid::refined() const { return TimeGrid(t_minus_, t_plus_, 2 * steps_); }

}  // namespace bulab
