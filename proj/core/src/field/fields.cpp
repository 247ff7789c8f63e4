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

#include "bulab/field/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bulab {
namespace {

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

}  // namespace

ScalarField::ScalarField(const Grid& grid) : grid_(grid), samples_(grid.size(), 0.0) {}

ScalarField::ScalarField(const Grid& grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw std::invalid_argument("sample count does not match grid size");
}

ScalarField ScalarField::sample(const Grid& grid, const std::function<double(const Point&)>& f) {
  ScalarField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) out.samples_[i] = f(grid.point(i));
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) noexcept {
  for (double& v : samples_) v *= s;
  return *this;
}

ScalarField& ScalarField::add_scaled(double s, const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += s * other.samples_[i];
  return *this;
}

ScalarField& ScalarField::multiply(const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] *= other.samples_[i];
  return *this;
}

bool ScalarField::all_finite() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::mean() const noexcept {
  double s = 0.0;
  for (double v : samples_) s += v;
  return s / static_cast<double>(samples_.size());
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

VectorField::VectorField(const Grid& grid)
    : components_(static_cast<std::size_t>(grid.dim()), ScalarField(grid)) {}

VectorField::VectorField(std::vector<ScalarField> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector field needs components");
  for (const auto& c : components_) require_same_grid(c.grid(), components_.front().grid());
  if (static_cast<int>(components_.size()) != components_.front().grid().dim())
    throw std::invalid_argument("vector field needs one component per dimension");
}

VectorField& VectorField::operator+=(const VectorField& other) {
  for (int i = 0; i < dim(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  for (int i = 0; i < dim(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(double s) noexcept {
  for (auto& c : components_) c *= s;
  return *this;
}

VectorField& VectorField::add_scaled(double s, const VectorField& other) {
  for (int i = 0; i < dim(); ++i) components_[i].add_scaled(s, other.components_[i]);
  return *this;
}

bool VectorField::all_finite() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const ScalarField& c) { return c.all_finite(); });
}

double VectorField::max_magnitude() const noexcept {
  double m = 0.0;
  const std::size_t n = components_.front().size();
  for (std::size_t p = 0; p < n; ++p) {
    double s = 0.0;
    for (const auto& c : components_) s += c[p] * c[p];
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

TensorField::TensorField(const Grid& grid)
    : dim_(grid.dim()), components_(static_cast<std::size_t>(grid.dim() * grid.dim()), ScalarField(grid)) {}

TensorField& TensorField::operator*=(double s) noexcept {
  for (auto& c : components_) c *= s;
  return *this;
}

TensorField TensorField::outer(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid());
  TensorField out(a.grid());
  for (int j = 0; j < out.dim_; ++j)
    for (int l = 0; l < out.dim_; ++l) {
      ScalarField& c = out(j, l);
      for (std::size_t p = 0; p < c.size(); ++p) c[p] = a[j][p] * b[l][p];
    }
  return out;
}

SpaceTimeField::SpaceTimeField(const Grid& grid, const TimeGrid& time_grid)
    : time_grid_(time_grid), frames_(static_cast<std::size_t>(time_grid.frames()), ScalarField(grid)) {}

SpaceTimeField::SpaceTimeField(const TimeGrid& time_grid, std::vector<ScalarField> frames)
    : time_grid_(time_grid), frames_(std::move(frames)) {
  if (static_cast<int>(frames_.size()) != time_grid_.frames())
    throw std::invalid_argument("frame count does not match the time grid");
  for (const auto& f : frames_) require_same_grid(f.grid(), frames_.front().grid());
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& other) {
  for (int m = 0; m < frame_count(); ++m) frames_[m] += other.frames_[m];
  return *this;
}

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& other) {
  for (int m = 0; m < frame_count(); ++m) frames_[m] -= other.frames_[m];
  return *this;
}

SpaceTimeField& SpaceTimeField::operator*=(double s) noexcept {
  for (auto& f : frames_) f *= s;
  return *this;
}

SpaceTimeField& SpaceTimeField::add_scaled(double s, const SpaceTimeField& other) {
  for (int m = 0; m < frame_count(); ++m) frames_[m].add_scaled(s, other.frames_[m]);
  return *this;
}

bool SpaceTimeField::all_finite() const noexcept {
  return std::all_of(frames_.begin(), frames_.end(), [](const ScalarField& f) { return f.all_finite(); });
}

bool SpaceTimeField::vanishes_at_time_ends() const noexcept {
  return frames_.front().max_abs() == 0.0 && frames_.back().max_abs() == 0.0;
}

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b) { return a += b; }
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b) { return a -= b; }

}  // namespace bulab
