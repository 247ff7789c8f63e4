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

#include "bulab/experiments/config.hpp"
#include "bulab/experiments/report.hpp"

namespace bulab::experiments {

/// Runs the experiment named by the config and returns its report; writes
/// nothing. Randomized experiments require a seed. Invalid parameters
/// surface as ConfigError or as the owning module's exception, before any
/// artifact exists.
ExperimentReport run_experiment(const ExperimentConfig& config);

// One suite per experiment; each appends rows, assertions, metrics and
// series to the report.
void run_matrix_lemma_suite(ExperimentReport& report);
void run_commutator_suite(ExperimentReport& report);
void run_weighted_suite(ExperimentReport& report);
void run_cz_suite(ExperimentReport& report);
void run_ap_probe_suite(ExperimentReport& report);
void run_shear_suite(ExperimentReport& report);
void run_axisym_suite(ExperimentReport& report);
void run_separation_suite(ExperimentReport& report);
void run_example_suite(ExperimentReport& report);
void run_cutoff_suite(ExperimentReport& report);

}  // namespace bulab::experiments
