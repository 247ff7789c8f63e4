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

#include "bulab/nse/separation.hpp"

#include <cmath>
#include <stdexcept>

#include "bulab/field/weights.hpp"

namespace bulab::nse {

double weighted_distance(const VectorField& u, const VectorField& v, double k) {
  if (!(u.grid() == v.grid()) || u.dim() != v.dim()) throw std::invalid_argument("fields on different grids");
  const Grid& g = u.grid();
  const ScalarField w = sample_spatial_weight(g, k);
  double s = 0.0;
  for (int i = 0; i < u.dim(); ++i) {
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      const double d = u[i][idx] - v[i][idx];
      s += w[idx] * d * d;
    }
  }
  return s * g.cell_volume();
}

SeparationReport separation_track(const VectorField& u1_0, const VectorField& u2_0,
                                  const MildSolverConfig& config, double k) {
  if (!(k >= 0.0)) throw std::invalid_argument("k must be non-negative");
  const MildSolver solver(u1_0.grid(), config);
  MildSolver::State s1 = solver.to_state(u1_0);
  MildSolver::State s2 = solver.to_state(u2_0);
  SeparationReport r;
  r.times.push_back(0.0);
  r.distances.push_back(weighted_distance(solver.to_field(s1), solver.to_field(s2), k));
  const int steps = static_cast<int>(std::llround(config.total_time / config.dt));
  for (int m = 1; m <= steps; ++m) {
    try {
      s1 = solver.step(s1, config.dt);
      s2 = solver.step(s2, config.dt);
    } catch (const DomainError& e) {
      r.truncated = true;
      r.note = e.what();
      break;
    }
    const double d = weighted_distance(solver.to_field(s1), solver.to_field(s2), k);
    if (!std::isfinite(d)) {
      r.truncated = true;
      r.note = "non-finite distance at step " + std::to_string(m);
      break;
    }
    r.times.push_back(m * config.dt);
    r.distances.push_back(d);
  }
  r.final_distance = r.distances.back();
  return r;
}

}  // namespace bulab::nse
