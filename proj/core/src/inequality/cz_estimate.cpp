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

#include "bulab/inequality/cz_estimate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bulab/field/weights.hpp"
#include "bulab/inequality/families.hpp"
#include "bulab/spectral/operators.hpp"

namespace bulab::inequality {
namespace {

double weighted_sum(const ScalarField& f, const ScalarField& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i] * f[i];
  return s * f.grid().cell_volume();
}

}  // namespace

void require_cz_exponent(double k) {
  if (!(k >= 0.0) || k >= kCzExponentLimit) {
    throw DomainError("weighted CZ bound requires 0 <= k < 5/2, got k = " + std::to_string(k));
  }
}

double cz_lhs(const TensorField& f, double k) {
  require_cz_exponent(k);
  const ScalarField w = sample_spatial_weight(f.grid(), k);
  const VectorField r = spectral::cz_divergence(f);
  double s = 0.0;
  for (const ScalarField& c : r.components()) s += weighted_sum(c, w);
  return s;
}

double cz_rhs(const TensorField& f, double k) {
  require_cz_exponent(k);
  const ScalarField w = sample_spatial_weight(f.grid(), k);
  double s = 0.0;
  for (const ScalarField& c : f.components()) {
    s += weighted_sum(c, w);
    const VectorField grad = spectral::gradient(c);
    for (const ScalarField& d : grad.components()) s += weighted_sum(d, w);
  }
  return s;
}

double cz_ratio(const TensorField& f, double k) {
  const double lhs = cz_lhs(f, k);
  const double rhs = cz_rhs(f, k);
  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

CzDensities cz_densities(const TensorField& f) {
  const Grid& g = f.grid();
  CzDensities d{ScalarField(g), ScalarField(g)};
  const VectorField r = spectral::cz_divergence(f);
  for (const ScalarField& c : r.components()) {
    for (std::size_t i = 0; i < g.size(); ++i) d.lhs[i] += c[i] * c[i];
  }
  for (const ScalarField& c : f.components()) {
    for (std::size_t i = 0; i < g.size(); ++i) d.rhs[i] += c[i] * c[i];
    const VectorField grad = spectral::gradient(c);
    for (const ScalarField& dc : grad.components()) {
      for (std::size_t i = 0; i < g.size(); ++i) d.rhs[i] += dc[i] * dc[i];
    }
  }
  return d;
}

double cz_weighted(const ScalarField& density, double k) {
  require_cz_exponent(k);
  const ScalarField w = sample_spatial_weight(density.grid(), k);
  double s = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) s += w[i] * density[i];
  return s * density.grid().cell_volume();
}

bool ApProbeReport::riesz_ratio_nondecreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].riesz_ratio < rows[i - 1].riesz_ratio) return false;
  }
  return true;
}

ApProbeReport ap_failure_probe(double k, std::span<const double> radii, const ApProbeOptions& options) {
  if (!(k >= 0.0)) throw std::invalid_argument("k must be non-negative");
  ApProbeReport report;
  report.k = k;
  for (double radius : radii) {
    const double length = options.box_per_radius * radius;
    if (!(radius > 0.0) || radius + options.width > 0.5 * length - 1.0) {
      throw DomainError("plateau radius too close to the box half-width");
    }
    int n = static_cast<int>(std::lround(options.points_per_unit * length));
    n += n % 2;
    const Grid grid = Grid::make(options.dim, n, length);
    const ScalarField f = plateau_field(grid, radius, options.width);
    const ScalarField w = sample_spatial_weight(grid, k);
    ApProbeRow row;
    row.radius = radius;
    row.box_length = length;
    row.grid_points = n;
    row.riesz_ratio = weighted_sum(spectral::riesz_second(f, 0, 0), w) / weighted_sum(f, w);
    if (k < kCzExponentLimit) {
      TensorField tensor(grid);
      for (int i = 0; i < grid.dim(); ++i) tensor(i, i) = f;
      row.divergence_ratio = cz_ratio(tensor, k);
    } else {
      row.divergence_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace bulab::inequality
