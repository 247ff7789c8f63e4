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

#include <string>
#include <string_view>

#include "bulab/field/fields.hpp"
#include "bulab/field/grid.hpp"

namespace bulab {

/// h(t) = t e^{-t}. Throws DomainError for t <= 0.
double temporal_weight(double t);
/// h'(t) = (1 - t) e^{-t}. Throws DomainError for t <= 0.
double temporal_weight_derivative(double t);
/// log h(t) = log t - t, finite wherever h is.
double log_temporal_weight(double t);

/// (1 + |x|^2)^{-k}.
double spatial_weight(const Point& x, double k);
double spatial_weight_r2(double r2, double k);

/// Which power of (1 + |x|^2) a weighted functional carries.
enum class ExponentConvention {
  kSingle,  ///< (1 + |x|^2)^{-k}, as in the statement of the estimate.
  kDouble,  ///< (1 + |x|^2)^{-2k}, as manipulated inside the proof.
};

std::string_view to_string(ExponentConvention c) noexcept;
ExponentConvention parse_convention(std::string_view text);

/// Carleman parameter a and spatial decay exponent k.
struct WeightParams {
  double a = 10.0;
  double k = 0.0;
  ExponentConvention convention = ExponentConvention::kSingle;

  /// Throws std::invalid_argument unless a >= 0 and k >= 0.
  void validate() const;
  /// The exponent actually applied to (1 + |x|^2): k or 2k.
  double spatial_exponent() const noexcept {
    return convention == ExponentConvention::kDouble ? 2.0 * k : k;
  }
};

/// Lattice samples of (1 + |x|^2)^{-exponent}.
ScalarField sample_spatial_weight(const Grid& grid, double exponent);

}  // namespace bulab
