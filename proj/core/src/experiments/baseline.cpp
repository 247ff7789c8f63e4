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

#include "bulab/experiments/baseline.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bulab::experiments {

BaselineStore BaselineStore::load(const std::string& path) {
  BaselineStore store;
  std::ifstream in(path);
  if (!in) return store;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = line.substr(0, eq);
    const std::string text = line.substr(eq + 3);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad number '" + text + "'");
    }
    store.values_[key] = v;
  }
  return store;
}

void BaselineStore::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write baseline file " + path);
  out << "# frozen regression metrics: <experiment>.<config fingerprint>.<metric> = value\n";
  for (const auto& [k, v] : values_) out << k << " = " << format_number(v) << "\n";
}

std::optional<double> BaselineStore::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string baseline_key(const ExperimentConfig& config, const std::string& metric) {
  return std::string(to_string(config.experiment())) + "." + config.fingerprint() + "." + metric;
}

void compare_with_baselines(ExperimentReport& report, const BaselineStore& store) {
  const std::string prefix = std::string(to_string(report.config.experiment())) + ".";
  for (const Metric& m : report.metrics) {
    const std::string key = baseline_key(report.config, m.name);
    const std::optional<double> frozen = store.get(key);
    if (!frozen) {
      bool other_config = false;
      for (const auto& [k, v] : store.values()) {
        if (k.rfind(prefix, 0) == 0 && k.size() > m.name.size() &&
            k.compare(k.size() - m.name.size(), m.name.size(), m.name) == 0) {
          other_config = true;
        }
      }
      report.check("baseline:" + m.name, false,
                   other_config ? "baseline key mismatch: frozen under a different config (key " + key + " absent)"
                                : "no frozen baseline for key " + key);
      continue;
    }
    bool ok = false;
    if (m.kind == MetricKind::kUpperBound) {
      ok = m.value <= *frozen + m.tolerance * std::abs(*frozen);
    } else {
      ok = std::abs(m.value - *frozen) <= m.tolerance * std::abs(*frozen);
    }
    report.check("baseline:" + m.name, ok,
                 "value " + format_number(m.value) + " vs frozen " + format_number(*frozen) +
                     (ok ? "" : " (drifted metric " + m.name + ")"));
  }
}

void freeze_baselines(const ExperimentReport& report, BaselineStore& store, bool force) {
  if (!report.passed()) throw std::runtime_error("refusing to freeze baselines from a failing run");
  for (const Metric& m : report.metrics) {
    const std::string key = baseline_key(report.config, m.name);
    if (store.contains(key) && !force) {
      throw std::runtime_error("baseline " + key + " already frozen; pass --force to overwrite");
    }
  }
  for (const Metric& m : report.metrics) store.set(baseline_key(report.config, m.name), m.value);
}

}  // namespace bulab::experiments
