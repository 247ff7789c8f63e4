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

#include <filesystem>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bulab/experiments/config.hpp"

namespace bulab::experiments {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// How a frozen metric is compared on later runs.
enum class MetricKind {
  kUpperBound,  ///< value <= frozen * (1 + tolerance)
  kMatch,       ///< |value - frozen| <= tolerance * |frozen|
};

struct Metric {
  std::string name;
  double value = 0.0;
  MetricKind kind = MetricKind::kUpperBound;
  double tolerance = 1e-9;
};

/// One polyline of a plot; series sharing `plot` land in one SVG.
struct Series {
  std::string plot;
  std::string label;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<double> x;
  std::vector<double> y;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ExperimentReport {
  ExperimentConfig config;
  Table table;
  /// Further tables, written as <experiment>.<name>.csv.
  std::map<std::string, Table> extra_tables;
  /// Binary artifacts written verbatim under their file names.
  std::map<std::string, std::vector<std::uint8_t>> blobs;
  std::vector<Assertion> assertions;
  std::vector<Metric> metrics;
  std::vector<Series> series;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
  std::map<std::string, std::string> artifact_hashes;

  explicit ExperimentReport(ExperimentConfig cfg) : config(std::move(cfg)) {}

  void check(std::string name, bool passed, std::string detail = {});
  bool passed() const noexcept;
};

/// Shortest round-trip text for a double; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);
std::string format_number(int v);

/// Byte-deterministic CSV of the table.
std::string to_csv(const Table& table);
/// JSON mirror of the report, including wall-clock and artifact hashes.
std::string to_json(const ExperimentReport& report);

/// Writes every table, blob and report.json into dir; hashes of all but
/// report.json are recorded in the report.
void write_artifacts(ExperimentReport& report, const std::filesystem::path& dir);

/// Series read back from a report.json.
std::vector<Series> read_series(const std::filesystem::path& report_json);

}  // namespace bulab::experiments
