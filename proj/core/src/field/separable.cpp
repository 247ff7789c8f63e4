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

#include "bulab/field/separable.hpp"

#include <cmath>
#include <stdexcept>

#include "bulab/field/quadrature.hpp"

namespace bulab {

SeparableField::SeparableField(const Grid& grid, const TimeGrid& time_grid)
    : grid_(grid), time_grid_(time_grid) {}

SeparableField SeparableField::from_bump(const BumpSpec& spec, const Grid& grid, const TimeGrid& time_grid) {
  spec.check_inside(time_grid);
  SeparableField out(grid, time_grid);
  out.add_term(temporal_profile(*spec.time, time_grid), make_bump(spec, grid));
  return out;
}

void SeparableField::add_term(std::vector<double> profile, ScalarField spatial) {
  if (static_cast<int>(profile.size()) != time_grid_.frames())
    throw std::invalid_argument("profile length does not match the time grid");
  if (!(spatial.grid() == grid_)) throw std::invalid_argument("spatial factor on a different grid");
  terms_.push_back(SeparableTerm{std::move(profile), std::move(spatial)});
}

SeparableField& SeparableField::add_scaled(double s, const SeparableField& other) {
  if (!(other.grid_ == grid_) || !(other.time_grid_ == time_grid_))
    throw std::invalid_argument("separable fields on different lattices");
  for (const auto& term : other.terms_) {
    std::vector<double> profile = term.profile;
    for (double& c : profile) c *= s;
    terms_.push_back(SeparableTerm{std::move(profile), term.spatial});
  }
  return *this;
}

ScalarField SeparableField::frame(int m) const {
  ScalarField out(grid_);
  for (const auto& term : terms_) {
    if (term.profile[m] != 0.0) out.add_scaled(term.profile[m], term.spatial);
  }
  return out;
}

SpaceTimeField SeparableField::to_frames() const {
  std::vector<ScalarField> frames;
  frames.reserve(static_cast<std::size_t>(time_grid_.frames()));
  for (int m = 0; m < time_grid_.frames(); ++m) frames.push_back(frame(m));
  return SpaceTimeField(time_grid_, std::move(frames));
}

double SeparableField::inner_product(const SeparableField& other) const {
  if (!(other.grid_ == grid_) || !(other.time_grid_ == time_grid_))
    throw std::invalid_argument("separable fields on different lattices");
  double sum = 0.0;
  for (int m = 0; m < time_grid_.frames(); ++m) {
    const ScalarField a = frame(m);
    if (&other == this) {
      sum += bulab::inner_product(a, a);
    } else {
      sum += bulab::inner_product(a, other.frame(m));
    }
  }
  return sum * time_grid_.dt();
}

double SeparableField::norm() const { return std::sqrt(inner_product(*this)); }

}  // namespace bulab
