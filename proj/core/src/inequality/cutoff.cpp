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

#include "bulab/inequality/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "bulab/inequality/families.hpp"
#include "bulab/inequality/theorem.hpp"

namespace bulab::inequality {

namespace {

double relative_change(LogScalar last, LogScalar previous) {
  if (last.is_zero()) return previous.is_zero() ? 0.0 : 1.0;
  return std::abs(1.0 - log_ratio(previous, last));
}

}  // namespace

CutoffReport cutoff_convergence_study(const SpaceTimeField& u, std::span<const double> m_values,
                                      const WeightParams& params) {
  params.validate();
  if (m_values.empty()) throw std::invalid_argument("no cutoff scales given");
  const Grid& grid = u.grid();
  CutoffReport report;
  for (double m : m_values) {
    if (!(m > 0.0)) throw std::invalid_argument("cutoff scale must be positive");
    if (2.0 * m >= 0.5 * grid.box_length() - grid.spacing()) {
      throw DomainError("box too small for cutoff scale m = " + std::to_string(m));
    }
    const ScalarField eta = radial_cutoff(grid, m);
    SpaceTimeField cut = u;
    for (ScalarField& f : cut.frames()) f.multiply(eta);
    const FrameIntegrals fi = frame_integrals(cut, params.spatial_exponent());
    report.rows.push_back({m, theorem_lhs(fi, params.a), theorem_rhs(fi, params.a)});
  }
  if (report.rows.size() >= 2) {
    const CutoffRow& last = report.rows.back();
    const CutoffRow& prev = report.rows[report.rows.size() - 2];
    report.lhs_change = relative_change(last.lhs, prev.lhs);
    report.rhs_change = relative_change(last.rhs, prev.rhs);
  }
  return report;
}

SpaceTimeField spatially_constant_field(const Grid& grid, const TimeGrid& time_grid, const TemporalBump& phi) {
  SpaceTimeField u(grid, time_grid);
  for (int m = 0; m < time_grid.frames(); ++m) {
    const double c = phi(time_grid.time(m));
    for (double& v : u.frame(m).data()) v = c;
  }
  return u;
}

}  // namespace bulab::inequality
