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

#include "bulab/experiments/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bulab/field/field_io.hpp"
#include "json.hpp"

namespace bulab::experiments {

using nlohmann::ordered_json;

void ExperimentReport::check(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

bool ExperimentReport::passed() const noexcept {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_number(int v) { return std::to_string(v); }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  return content_hash(std::vector<std::uint8_t>(content.begin(), content.end()));
}

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.header[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport& r) {
  ordered_json j;
  j["experiment"] = std::string(to_string(r.config.experiment()));
  j["fingerprint"] = r.config.fingerprint();
  ordered_json cfg;
  cfg["seed"] = r.config.seed() ? ordered_json(*r.config.seed()) : ordered_json(nullptr);
  for (const auto& [k, v] : r.config.values()) cfg[k] = v;
  j["config"] = cfg;
  j["passed"] = r.passed();
  ordered_json asserts = ordered_json::array();
  for (const Assertion& a : r.assertions) asserts.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = asserts;
  ordered_json metrics = ordered_json::array();
  for (const Metric& m : r.metrics) {
    metrics.push_back({{"name", m.name},
                       {"value", number(m.value)},
                       {"kind", m.kind == MetricKind::kMatch ? "match" : "upper_bound"},
                       {"tolerance", m.tolerance}});
  }
  j["metrics"] = metrics;
  ordered_json series = ordered_json::array();
  for (const Series& s : r.series) {
    ordered_json xs = ordered_json::array();
    ordered_json ys = ordered_json::array();
    for (double v : s.x) xs.push_back(number(v));
    for (double v : s.y) ys.push_back(number(v));
    series.push_back({{"plot", s.plot},
                      {"label", s.label},
                      {"x_label", s.x_label},
                      {"y_label", s.y_label},
                      {"log_x", s.log_x},
                      {"log_y", s.log_y},
                      {"x", xs},
                      {"y", ys}});
  }
  j["series"] = series;
  j["notes"] = r.notes;
  j["wall_seconds"] = r.wall_seconds;
  j["artifact_hashes"] = r.artifact_hashes;
  return j.dump(2) + "\n";
}

void write_artifacts(ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem(to_string(report.config.experiment()));
  report.artifact_hashes[stem + ".csv"] = write_file(dir / (stem + ".csv"), to_csv(report.table));
  for (const auto& [name, table] : report.extra_tables) {
    const std::string file = stem + "." + name + ".csv";
    report.artifact_hashes[file] = write_file(dir / file, to_csv(table));
  }
  for (const auto& [name, bytes] : report.blobs) {
    write_bytes(dir / name, bytes);
    report.artifact_hashes[name] = content_hash(bytes);
  }
  write_file(dir / "report.json", to_json(report));
}

std::vector<Series> read_series(const std::filesystem::path& report_json) {
  std::ifstream in(report_json);
  if (!in) throw std::runtime_error("cannot read " + report_json.string());
  const ordered_json j = ordered_json::parse(in);
  const auto as_double = [](const ordered_json& v) {
    if (v.is_number()) return v.get<double>();
    const std::string s = v.get<std::string>();
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    return std::nan("");
  };
  std::vector<Series> out;
  for (const auto& s : j.at("series")) {
    Series series;
    series.plot = s.at("plot").get<std::string>();
    series.label = s.at("label").get<std::string>();
    series.x_label = s.at("x_label").get<std::string>();
    series.y_label = s.at("y_label").get<std::string>();
    series.log_x = s.at("log_x").get<bool>();
    series.log_y = s.at("log_y").get<bool>();
    for (const auto& v : s.at("x")) series.x.push_back(as_double(v));
    for (const auto& v : s.at("y")) series.y.push_back(as_double(v));
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace bulab::experiments
