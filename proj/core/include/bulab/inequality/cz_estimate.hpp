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

#include <span>
#include <vector>

#include "bulab/field/fields.hpp"

namespace bulab::inequality {

/// Upper end (exclusive) of the decay exponents the weighted CZ bound covers.
inline constexpr double kCzExponentLimit = 2.5;

/// Throws DomainError unless 0 <= k < 5/2.
void require_cz_exponent(double k);

/// int (1+|x|^2)^{-k} |R div F|^2 with R = grad (-Delta)^{-1} div.
double cz_lhs(const TensorField& f, double k);
/// int (1+|x|^2)^{-k} (|grad F|^2 + |F|^2).
double cz_rhs(const TensorField& f, double k);
/// cz_lhs / cz_rhs; 0 when both vanish.
double cz_ratio(const TensorField& f, double k);

/// Pointwise integrands |R div F|^2 and |grad F|^2 + |F|^2, so one
/// transform pass serves every k.
struct CzDensities {
  ScalarField lhs;
  ScalarField rhs;
};
CzDensities cz_densities(const TensorField& f);
/// int (1+|x|^2)^{-k} density.
double cz_weighted(const ScalarField& density, double k);

struct ApProbeOptions {
  int dim = 3;
  double width = 1.0;            ///< plateau edge width
  double box_per_radius = 4.0;   ///< L = box_per_radius * R
  double points_per_unit = 4.0;  ///< N ~ points_per_unit * L, rounded to even
};

struct ApProbeRow {
  double radius = 0.0;
  double box_length = 0.0;
  int grid_points = 0;
  /// int w |R_11 f_R|^2 / int w |f_R|^2 with R_11 = (-Delta)^{-1} d_1 d_1.
  double riesz_ratio = 0.0;
  /// cz_ratio of the divergence-form field F = f_R I; NaN when k >= 5/2.
  double divergence_ratio = 0.0;
};

struct ApProbeReport {
  double k = 0.0;
  std::vector<ApProbeRow> rows;
  bool riesz_ratio_nondecreasing() const;
};

/// Zeroth-order Riesz ratio on growing plateaus f_R, alongside the
/// divergence-structure ratio on the same plateaus. Exploratory.
ApProbeReport ap_failure_probe(double k, std::span<const double> radii, const ApProbeOptions& options = {});

}  // namespace bulab::inequality
