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

#include <map>
#include <optional>
#include <string>

#include "bulab/experiments/report.hpp"

namespace bulab::experiments {

/// Frozen metrics in a plain "key = value" text file, one entry per line,
/// sorted by key. Keys are <experiment>.<config fingerprint>.<metric>, so
/// any config change (N, seed, ...) misses the old entries instead of
/// comparing against them.
class BaselineStore {
 public:
  /// A missing file yields an empty store.
  static BaselineStore load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<double> get(const std::string& key) const;
  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, double value) { values_[key] = value; }
  const std::map<std::string, double>& values() const noexcept { return values_; }

 private:
  std::map<std::string, double> values_;
};

std::string baseline_key(const ExperimentConfig& config, const std::string& metric);

/// Adds one assertion per metric comparing it with the store.
void compare_with_baselines(ExperimentReport& report, const BaselineStore& store);

/// Records every metric of a passing report. Throws std::runtime_error when
/// a key already exists and force is false, or when the report failed.
void freeze_baselines(const ExperimentReport& report, BaselineStore& store, bool force);

}  // namespace bulab::experiments
