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


#include "bulab/experiments/runner.hpp"

#include <chrono>

namespace bulab::experiments {

ExperimentReport run_experiment(const ExperimentConfig& config) {
  for (const ExperimentInfo& info : list_experiments()) {
    if (info.kind == config.experiment() && info.randomized) config.require_seed();
  }
  ExperimentReport report(config);
  const auto start = std::chrono::steady_clock::now();
  switch (config.experiment()) {
    case ExperimentKind::kVerifyMatrixLemma: run_matrix_lemma_suite(report); break;
    case ExperimentKind::kVerifyCommutator: run_commutator_suite(report); break;
    case ExperimentKind::kVerifyWeighted: run_weighted_suite(report); break;
    case ExperimentKind::kVerifyCz: run_cz_suite(report); break;
    case ExperimentKind::kApProbe: run_ap_probe_suite(report); break;
    case ExperimentKind::kNseShear: run_shear_suite(report); break;
    case ExperimentKind::kNseAxisym: run_axisym_suite(report); break;
    case ExperimentKind::kNseSeparation: run_separation_suite(report); break;
    case ExperimentKind::kExample13: run_example_suite(report); break;
    case ExperimentKind::kCutoffStudy: run_cutoff_suite(report); break;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bulab::experiments
