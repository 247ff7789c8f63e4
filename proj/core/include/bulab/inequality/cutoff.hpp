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

#include "bulab/field/bumps.hpp"
#include "bulab/field/fields.hpp"
#include "bulab/field/log_scalar.hpp"
#include "bulab/field/weights.hpp"

namespace bulab::inequality {

struct CutoffRow {
  double m = 0.0;
  LogScalar lhs;
  LogScalar rhs;
};

struct CutoffReport {
  std::vector<CutoffRow> rows;
  /// |last - previous| / |last| for each side.
  double lhs_change = 0.0;
  double rhs_change = 0.0;

  bool converged(double tolerance = 0.02) const noexcept {
    return lhs_change <= tolerance && rhs_change <= tolerance;
  }
};

/// Evaluates both sides of the space-time estimate on eta(x/m) u for each m.
/// Throws DomainError when the cutoff support |x| <= 2m does not fit in the box.
CutoffReport cutoff_convergence_study(const SpaceTimeField& u, std::span<const double> m_values,
                                      const WeightParams& params);

/// phi(t) * 1: constant in space, a bump in time.
SpaceTimeField spatially_constant_field(const Grid& grid, const TimeGrid& time_grid, const TemporalBump& phi);

}  // namespace bulab::inequality
