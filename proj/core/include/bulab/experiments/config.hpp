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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bulab::experiments {

enum class ExperimentKind {
  kVerifyMatrixLemma,
  kVerifyCommutator,
  kVerifyWeighted,
  kVerifyCz,
  kApProbe,
  kNseShear,
  kNseAxisym,
  kNseSeparation,
  kExample13,
  kCutoffStudy,
};

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment(std::string_view name);

struct ExperimentInfo {
  ExperimentKind kind;
  std::string_view description;
  bool randomized;
};
const std::vector<ExperimentInfo>& list_experiments();

/// Invalid or unknown configuration input; the message names the key.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One documented parameter of an experiment.
struct ParamSpec {
  std::string key;
  std::string default_value;
  std::string description;
};

/// Parameters accepted by an experiment, with defaults.
const std::vector<ParamSpec>& parameter_schema(ExperimentKind kind);

/// Flat key = value configuration. Every schema key is present after
/// construction (defaults filled in); unknown keys are rejected.
class ExperimentConfig {
 public:
  static ExperimentConfig defaults(ExperimentKind kind);
  /// Parses "key = value" lines; '#' starts a comment. `experiment` is required.
  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::string& path);

  ExperimentKind experiment() const noexcept { return kind_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }
  void set_seed(std::uint64_t seed) noexcept { seed_ = seed; }
  /// Throws ConfigError for randomized experiments without a seed.
  std::uint64_t require_seed() const;

  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key) const;

  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  /// Canonical "key = value" text of every parameter and the seed.
  std::string canonical_text() const;
  /// 16 hex digits identifying the canonical text.
  std::string fingerprint() const;

 private:
  explicit ExperimentConfig(ExperimentKind kind);

  ExperimentKind kind_;
  std::optional<std::uint64_t> seed_;
  std::map<std::string, std::string> values_;
};

/// Environment variable selecting the worker thread count.
inline constexpr const char* kThreadsEnv = "BULAB_THREADS";
/// Parsed value of kThreadsEnv; 1 when unset. Throws ConfigError when malformed.
int thread_count();

}  // namespace bulab::experiments
