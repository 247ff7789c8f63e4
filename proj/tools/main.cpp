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


#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bulab/experiments/baseline.hpp"
#include "bulab/experiments/config.hpp"
#include "bulab/experiments/report.hpp"
#include "bulab/experiments/runner.hpp"
#include "bulab/experiments/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace bulab::experiments;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string baseline;
  bool force = false;
};

ExperimentConfig load_config(const Options& o) {
  ExperimentConfig cfg = ExperimentConfig::load(o.config);
  if (o.seed) cfg.set_seed(*o.seed);
  return cfg;
}

fs::path output_dir(const Options& o, const ExperimentConfig& cfg) {
  return o.out.empty() ? fs::path("out") / std::string(to_string(cfg.experiment())) : fs::path(o.out);
}

void print_summary(const ExperimentReport& r) {
  for (const Assertion& a : r.assertions) {
    std::printf("%s %s%s%s\n", a.passed ? "ok  " : "FAIL", a.name.c_str(), a.detail.empty() ? "" : "  ",
                a.detail.c_str());
  }
  for (const std::string& n : r.notes) std::printf("note %s\n", n.c_str());
  std::printf("%s: %s in %.2f s\n", std::string(to_string(r.config.experiment())).c_str(),
              r.passed() ? "passed" : "FAILED", r.wall_seconds);
}

void emit(ExperimentReport& report, const fs::path& dir) {
  const PlotResult plots = write_plots(report.series, dir);
  for (const std::string& n : plots.notes) report.notes.push_back(n);
  write_artifacts(report, dir);
  std::printf("artifacts in %s\n", dir.string().c_str());
}

int cmd_run(const Options& o) {
  const ExperimentConfig cfg = load_config(o);
  ExperimentReport report = run_experiment(cfg);
  if (!o.baseline.empty()) compare_with_baselines(report, BaselineStore::load(o.baseline));
  emit(report, output_dir(o, cfg));
  print_summary(report);
  return report.passed() ? 0 : kExitFailed;
}

int cmd_freeze(const Options& o) {
  const ExperimentConfig cfg = load_config(o);
  BaselineStore store = BaselineStore::load(o.baseline);
  ExperimentReport report = run_experiment(cfg);
  print_summary(report);
  freeze_baselines(report, store, o.force);
  store.save(o.baseline);
  if (!o.out.empty()) emit(report, o.out);
  std::printf("froze %zu metrics into %s\n", report.metrics.size(), o.baseline.c_str());
  return 0;
}

int cmd_plot(const Options& o) {
  const fs::path dir(o.out);
  const PlotResult r = write_plots(read_series(dir / "report.json"), dir);
  for (const fs::path& f : r.files) std::printf("wrote %s\n", f.string().c_str());
  for (const std::string& n : r.notes) std::printf("note %s\n", n.c_str());
  return 0;
}

int cmd_list() {
  for (const ExperimentInfo& info : list_experiments()) {
    std::printf("%-20s %s%s\n", std::string(to_string(info.kind)).c_str(), std::string(info.description).c_str(),
                info.randomized ? " (seed required)" : "");
    for (const ParamSpec& p : parameter_schema(info.kind)) {
      std::printf("    %-18s %-20s %s\n", p.key.c_str(), p.default_value.c_str(), p.description.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bulab: numerical checks for weighted backward-uniqueness estimates"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "run one experiment and write its artifacts");
  run->add_option("--config", o.config, "experiment config file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", o.seed, "64-bit seed; overrides the config");
  run->add_option("--out", o.out, "output directory (default out/<experiment>)");
  run->add_option("--baseline", o.baseline, "baseline file to compare metrics against");

  auto* freeze = app.add_subcommand("freeze", "run one experiment and record its metrics as baselines");
  freeze->add_option("--config", o.config, "experiment config file")->required()->check(CLI::ExistingFile);
  freeze->add_option("--seed", o.seed, "64-bit seed; overrides the config");
  freeze->add_option("--out", o.out, "also write artifacts into this directory");
  freeze->add_option("--baseline", o.baseline, "baseline file to update")->required();
  freeze->add_flag("--force", o.force, "overwrite existing baseline entries");

  auto* plot = app.add_subcommand("plot", "render SVG plots from a report directory");
  plot->add_option("--out", o.out, "directory holding report.json")->required()->check(CLI::ExistingDirectory);

  app.add_subcommand("list-experiments", "list experiments and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    thread_count();
    if (run->parsed()) return cmd_run(o);
    if (freeze->parsed()) return cmd_freeze(o);
    if (plot->parsed()) return cmd_plot(o);
    return cmd_list();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid parameter: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailed;
  }
}
