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
#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/nse/mild_solver.hpp"

namespace bulab::nse {

/// int (1+|x|^2)^{-k} |u - v|^2 dx.
double weighted_distance(const VectorField& u, const VectorField& v, double k);

struct SeparationReport {
  std::vector<double> times;
  std::vector<double> distances;
  double final_distance = 0.0;
  bool truncated = false;
  std::string note;
};

/// Co-evolves two solutions with the same integrator and records their
/// weighted distance after every step.
SeparationReport separation_track(const VectorField& u1_0, const VectorField& u2_0,
                                  const MildSolverConfig& config, double k);

}  // namespace bulab::nse
