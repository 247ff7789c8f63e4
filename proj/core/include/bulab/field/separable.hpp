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

#include <vector>

#include "bulab/field/bumps.hpp"
#include "bulab/field/fields.hpp"

namespace bulab {

/// One tensor-product term c(t_m) * B(x).
struct SeparableTerm {
  std::vector<double> profile;  ///< one value per time frame
  ScalarField spatial;
};

/// A space-time field held as a finite sum of tensor-product terms
/// sum_i c_i(t) B_i(x). Frames are materialized on demand, so memory scales
/// with the number of terms instead of the number of frames.
class SeparableField {
 public:
  SeparableField(const Grid& grid, const TimeGrid& time_grid);

  /// Spatial bump times its temporal bump; spec.time is required.
  static SeparableField from_bump(const BumpSpec& spec, const Grid& grid, const TimeGrid& time_grid);

  const Grid& grid() const noexcept { return grid_; }
  const TimeGrid& time_grid() const noexcept { return time_grid_; }
  const std::vector<SeparableTerm>& terms() const noexcept { return terms_; }

  void add_term(std::vector<double> profile, ScalarField spatial);
  /// Appends other's terms scaled by s.
  SeparableField& add_scaled(double s, const SeparableField& other);
  SeparableField& operator+=(const SeparableField& other) { return add_scaled(1.0, other); }
  SeparableField& operator-=(const SeparableField& other) { return add_scaled(-1.0, other); }

  /// sum_i c_i(t_m) B_i.
  ScalarField frame(int m) const;
  SpaceTimeField to_frames() const;

  /// Space-time pairing identical to inner_product(SpaceTimeField, SpaceTimeField),
  /// evaluated frame by frame.
  double inner_product(const SeparableField& other) const;
  double norm() const;

 private:
  Grid grid_;
  TimeGrid time_grid_;
  std::vector<SeparableTerm> terms_;
};

}  // namespace bulab
