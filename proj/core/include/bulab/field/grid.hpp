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

#include <array>
#include <cstddef>
#include <stdexcept>

namespace bulab {

/// Thrown when an argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Multi-index into a lattice. Unused trailing axes are zero when dim == 2.
using LatticeIndex = std::array<int, 3>;
/// A point in R^dim; unused trailing coordinates are zero when dim == 2.
using Point = std::array<double, 3>;

/// Uniform periodic lattice on the box [-L/2, L/2)^dim.
///
/// Samples are stored row-major: the last axis varies fastest. The
/// coordinate of lattice index i along any axis is -L/2 + i * dx.
class Grid {
 public:
  /// Validates dim in {2, 3}, N >= 8 and even, L > 0.
  static Grid make(int dim, int points_per_axis, double box_length);

  int dim() const noexcept { return dim_; }
  int points_per_axis() const noexcept { return n_; }
  double box_length() const noexcept { return length_; }
  double spacing() const noexcept { return spacing_; }
  /// dx^dim, the volume element of the rectangle rule.
  double cell_volume() const noexcept { return cell_volume_; }
  /// N^dim.
  std::size_t size() const noexcept { return size_; }

  double coordinate(int i) const noexcept { return -0.5 * length_ + i * spacing_; }
  Point point(std::size_t linear) const noexcept;
  LatticeIndex unravel(std::size_t linear) const noexcept;
  std::size_t ravel(const LatticeIndex& idx) const noexcept;

  bool operator==(const Grid& other) const noexcept {
    return dim_ == other.dim_ && n_ == other.n_ && length_ == other.length_;
  }

 private:
  Grid(int dim, int n, double length);

  int dim_;
  int n_;
  double length_;
  double spacing_;
  double cell_volume_;
  std::size_t size_;
};

/// Uniform time lattice t_m = T- + m * dt, m = 0..M, dt = (T+ - T-) / M.
class TimeGrid {
 public:
  /// Default horizon bound for "T+ sufficiently small".
  static constexpr double kDefaultMaxTPlus = 0.5;

  /// Validates 0 < T- < T+ <= max_t_plus and M >= 2.
  static TimeGrid make(double t_minus, double t_plus, int steps,
                       double max_t_plus = kDefaultMaxTPlus);

  double t_minus() const noexcept { return t_minus_; }
  double t_plus() const noexcept { return t_plus_; }
  int steps() const noexcept { return steps_; }
  /// M + 1.
  int frames() const noexcept { return steps_ + 1; }
  double dt() const noexcept { return dt_; }
  double time(int m) const noexcept { return t_minus_ + m * dt_; }
  /// Trapezoid weight of frame m.
  double trapezoid_weight(int m) const noexcept {
    return (m == 0 || m == steps_) ? 0.5 * dt_ : dt_;
  }
  /// Same lattice, twice the steps.
  TimeGrid refined() const;

  bool operator==(const TimeGrid& other) const noexcept {
    return t_minus_ == other.t_minus_ && t_plus_ == other.t_plus_ && steps_ == other.steps_;
  }

 private:
  TimeGrid(double t_minus, double t_plus, int steps);

  double t_minus_;
  double t_plus_;
  int steps_;
  double dt_;
};

}  // namespace bulab
