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

#include "bulab/field/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace bulab {

double temporal_weight(double t) {
  if (!(t > 0.0)) throw DomainError("temporal weight h(t) requires t > 0");
  return t * std::exp(-t);
}

double temporal_weight_derivative(double t) {
  if (!(t > 0.0)) throw DomainError("temporal weight h'(t) requires t > 0");
  return (1.0 - t) * std::exp(-t);
}

double log_temporal_weight(double t) {
  if (!(t > 0.0)) throw DomainError("log h(t) requires t > 0");
  return std::log(t) - t;
}

double spatial_weight_r2(double r2, double k) {
  if (k == 0.0) return 1.0;
  return std::pow(1.0 + r2, -k);
}

double spatial_weight(const Point& x, double k) {
  return spatial_weight_r2(x[0] * x[0] + x[1] * x[1] + x[2] * x[2], k);
}

std::string_view to_string(ExponentConvention c) noexcept {
  return c == ExponentConvention::kDouble ? "double_k" : "single_k";
}

ExponentConvention parse_convention(std::string_view text) {
  if (text == "single_k" || text == "single") return ExponentConvention::kSingle;
  if (text == "double_k" || text == "double") return ExponentConvention::kDouble;
  throw std::invalid_argument("unknown exponent convention '" + std::string(text) + "'");
}

void WeightParams::validate() const {
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("Carleman parameter a must be >= 0");
  if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("decay exponent k must be >= 0");
}

ScalarField sample_spatial_weight(const Grid& grid, double exponent) {
  return ScalarField::sample(grid, [exponent](const Point& x) { return spatial_weight(x, exponent); });
}

}  // namespace bulab
