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

#include "bulab/field/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bulab/field/grid.hpp"

namespace bulab {
namespace {

void require_same(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("inner product of fields on different grids");
}

std::vector<double> sample_weight(const Grid& grid, const SpatialWeightFn& w) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = w(grid.point(i));
  return out;
}

}  // namespace

double weighted_integral(const ScalarField& f, std::span<const double> w_spatial) {
  if (w_spatial.size() != f.size()) throw std::invalid_argument("weight sample count mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w_spatial[i] * f[i];
  if (!std::isfinite(sum)) throw DomainError("non-finite integrand in weighted_integral");
  return sum * f.grid().cell_volume();
}

double weighted_integral(const ScalarField& f, const SpatialWeightFn& w_spatial) {
  const std::vector<double> w = sample_weight(f.grid(), w_spatial);
  return weighted_integral(f, std::span<const double>(w));
}

double weighted_integral(const SpaceTimeField& f, const SpatialWeightFn& w_spatial,
                         const TemporalWeightFn& w_temporal) {
  const std::vector<double> w = sample_weight(f.grid(), w_spatial);
  const TimeGrid& tg = f.time_grid();
  double total = 0.0;
  for (int m = 0; m < f.frame_count(); ++m) {
    const double s = weighted_integral(f.frame(m), std::span<const double>(w));
    if (s == 0.0) continue;
    total += tg.trapezoid_weight(m) * w_temporal(tg.time(m)) * s;
  }
  if (!std::isfinite(total)) throw DomainError("weighted_integral overflowed; use the log-domain path");
  return total;
}

LogScalar log_weighted_integral(const SpaceTimeField& f, const SpatialWeightFn& w_spatial,
                                const TemporalWeightFn& log_w_temporal) {
  const std::vector<double> w = sample_weight(f.grid(), w_spatial);
  const TimeGrid& tg = f.time_grid();
  LogAccumulator acc;
  for (int m = 0; m < f.frame_count(); ++m) {
    const double s = weighted_integral(f.frame(m), std::span<const double>(w));
    if (s == 0.0) continue;
    acc.add_log(std::log(tg.trapezoid_weight(m)) + log_w_temporal(tg.time(m)) + std::log(std::abs(s)),
                s > 0.0 ? 1 : -1);
  }
  return acc.result();
}

double inner_product(const ScalarField& f, const ScalarField& g) {
  require_same(f.grid(), g.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
  return sum * f.grid().cell_volume();
}

double inner_product(const VectorField& f, const VectorField& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("vector fields of different dimension");
  double sum = 0.0;
  for (int i = 0; i < f.dim(); ++i) sum += inner_product(f[i], g[i]);
  return sum;
}

double inner_product(const SpaceTimeField& f, const SpaceTimeField& g) {
  if (!(f.time_grid() == g.time_grid())) throw std::invalid_argument("space-time fields on different time grids");
  double sum = 0.0;
  for (int m = 0; m < f.frame_count(); ++m) sum += inner_product(f.frame(m), g.frame(m));
  return sum * f.time_grid().dt();
}

double l2_norm(const ScalarField& f) { return std::sqrt(inner_product(f, f)); }
double l2_norm(const VectorField& f) { return std::sqrt(inner_product(f, f)); }
double l2_norm(const SpaceTimeField& f) { return std::sqrt(inner_product(f, f)); }

}  // namespace bulab
