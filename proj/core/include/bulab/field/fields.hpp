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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bulab/field/grid.hpp"

namespace bulab {

/// Real samples of a scalar function on a Grid.
class ScalarField {
 public:
  /// Zero field.
  explicit ScalarField(const Grid& grid);
  ScalarField(const Grid& grid, std::vector<double> samples);

  /// Samples f(x) at every lattice point.
  static ScalarField sample(const Grid& grid, const std::function<double(const Point&)>& f);

  const Grid& grid() const noexcept { return grid_; }
  std::span<double> samples() noexcept { return samples_; }
  std::span<const double> samples() const noexcept { return samples_; }
  std::vector<double>& data() noexcept { return samples_; }
  const std::vector<double>& data() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double& operator[](std::size_t i) noexcept { return samples_[i]; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s) noexcept;
  /// this += s * other.
  ScalarField& add_scaled(double s, const ScalarField& other);
  /// Pointwise product.
  ScalarField& multiply(const ScalarField& other);

  bool all_finite() const noexcept;
  double max_abs() const noexcept;
  double mean() const noexcept;

 private:
  Grid grid_;
  std::vector<double> samples_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);

/// dim scalar components on one grid.
class VectorField {
 public:
  explicit VectorField(const Grid& grid);
  explicit VectorField(std::vector<ScalarField> components);

  const Grid& grid() const noexcept { return components_.front().grid(); }
  int dim() const noexcept { return static_cast<int>(components_.size()); }
  ScalarField& operator[](int i) noexcept { return components_[i]; }
  const ScalarField& operator[](int i) const noexcept { return components_[i]; }
  std::vector<ScalarField>& components() noexcept { return components_; }
  const std::vector<ScalarField>& components() const noexcept { return components_; }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double s) noexcept;
  VectorField& add_scaled(double s, const VectorField& other);

  bool all_finite() const noexcept;
  /// max over lattice of |u(x)|.
  double max_magnitude() const noexcept;

 private:
  std::vector<ScalarField> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);

/// Rank-2 tensor field F_{jl}, stored row-major (index j * dim + l).
class TensorField {
 public:
  explicit TensorField(const Grid& grid);

  const Grid& grid() const noexcept { return components_.front().grid(); }
  int dim() const noexcept { return dim_; }
  ScalarField& operator()(int j, int l) noexcept { return components_[j * dim_ + l]; }
  const ScalarField& operator()(int j, int l) const noexcept { return components_[j * dim_ + l]; }
  std::vector<ScalarField>& components() noexcept { return components_; }
  const std::vector<ScalarField>& components() const noexcept { return components_; }

  TensorField& operator*=(double s) noexcept;

  /// F_{jl} = a_j b_l pointwise.
  static TensorField outer(const VectorField& a, const VectorField& b);

 private:
  int dim_;
  std::vector<ScalarField> components_;
};

/// Scalar space-time samples: one ScalarField per time-lattice frame.
class SpaceTimeField {
 public:
  /// Zero field with M + 1 frames.
  SpaceTimeField(const Grid& grid, const TimeGrid& time_grid);
  SpaceTimeField(const TimeGrid& time_grid, std::vector<ScalarField> frames);

  const Grid& grid() const noexcept { return frames_.front().grid(); }
  const TimeGrid& time_grid() const noexcept { return time_grid_; }
  int frame_count() const noexcept { return static_cast<int>(frames_.size()); }
  ScalarField& frame(int m) noexcept { return frames_[m]; }
  const ScalarField& frame(int m) const noexcept { return frames_[m]; }
  std::vector<ScalarField>& frames() noexcept { return frames_; }
  const std::vector<ScalarField>& frames() const noexcept { return frames_; }

  SpaceTimeField& operator+=(const SpaceTimeField& other);
  SpaceTimeField& operator-=(const SpaceTimeField& other);
  SpaceTimeField& operator*=(double s) noexcept;
  SpaceTimeField& add_scaled(double s, const SpaceTimeField& other);

  bool all_finite() const noexcept;
  /// True when the first and last frames vanish identically.
  bool vanishes_at_time_ends() const noexcept;

 private:
  TimeGrid time_grid_;
  std::vector<ScalarField> frames_;
};

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b);

}  // namespace bulab
