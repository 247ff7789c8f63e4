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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bulab/experiments/baseline.hpp"
#include "bulab/experiments/config.hpp"
#include "bulab/experiments/parallel.hpp"
#include "bulab/experiments/report.hpp"
#include "bulab/experiments/runner.hpp"
#include "bulab/experiments/svg_plot.hpp"

namespace bulab::experiments {
namespace {

namespace fs = std::filesystem;

constexpr const char* kExample =
    "# comment line\n"
    "experiment = example-1-3\n"
    "seed = 13\n"
    "samples = 200   # trailing comment\n";

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("bulab_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

TEST(Config, ParsesValuesAndComments) {
  const ExperimentConfig cfg = ExperimentConfig::parse(kExample);
  EXPECT_EQ(cfg.experiment(), ExperimentKind::kExample13);
  ASSERT_TRUE(cfg.seed().has_value());
  EXPECT_EQ(*cfg.seed(), 13u);
  EXPECT_EQ(cfg.get_int("samples"), 200);
  EXPECT_EQ(cfg.get("box"), ExperimentConfig::defaults(ExperimentKind::kExample13).get("box"));
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_NE(error_of([] { ExperimentConfig::parse("experiment = example-1-3\nbogus = 1\n"); }).find("bogus"),
            std::string::npos);
  EXPECT_NE(error_of([] { ExperimentConfig::parse("experiment = example-1-3\nsamples = 1\nsamples = 2\n"); })
                .find("twice"),
            std::string::npos);
  EXPECT_NE(error_of([] { ExperimentConfig::parse("samples = 1\n"); }).find("experiment"), std::string::npos);
  EXPECT_NE(error_of([] { ExperimentConfig::parse("experiment = no-such-thing\n"); }).find("unknown"),
            std::string::npos);
  EXPECT_NE(error_of([] { ExperimentConfig::parse("experiment = example-1-3\njust words\n"); }).find("line 2"),
            std::string::npos);
  EXPECT_THROW(ExperimentConfig::parse("experiment = example-1-3\nsamples =\n"), ConfigError);
}

TEST(Config, EveryExperimentRoundTripsThroughCanonicalText) {
  for (const ExperimentInfo& info : list_experiments()) {
    ExperimentConfig cfg = ExperimentConfig::defaults(info.kind);
    if (info.randomized) cfg.set_seed(99);
    const ExperimentConfig back = ExperimentConfig::parse(cfg.canonical_text());
    EXPECT_EQ(back.canonical_text(), cfg.canonical_text()) << to_string(info.kind);
    EXPECT_EQ(back.fingerprint(), cfg.fingerprint());
    EXPECT_EQ(parse_experiment(to_string(info.kind)), info.kind);
  }
}

TEST(Config, FingerprintTracksParametersAndSeed) {
  const ExperimentConfig base = ExperimentConfig::parse(kExample);
  EXPECT_EQ(base.fingerprint().size(), 16u);
  ExperimentConfig other_seed = base;
  other_seed.set_seed(14);
  ExperimentConfig other_samples = base;
  other_samples.set("samples", "201");
  EXPECT_NE(base.fingerprint(), other_seed.fingerprint());
  EXPECT_NE(base.fingerprint(), other_samples.fingerprint());
  EXPECT_EQ(base.fingerprint(), ExperimentConfig::parse(kExample).fingerprint());
}

TEST(Config, RandomizedExperimentsNeedASeed) {
  const ExperimentConfig cfg = ExperimentConfig::parse("experiment = example-1-3\nsamples = 10\n");
  EXPECT_THROW(cfg.require_seed(), ConfigError);
  EXPECT_THROW(run_experiment(cfg), ConfigError);
  EXPECT_NE(cfg.canonical_text().find("seed = none"), std::string::npos);
}

TEST(Config, TypedGettersRejectBadValues) {
  ExperimentConfig cfg = ExperimentConfig::parse(kExample);
  cfg.set("samples", "12x");
  EXPECT_THROW(cfg.get_int("samples"), ConfigError);
  EXPECT_THROW(cfg.set("not_a_key", "1"), ConfigError);
  EXPECT_THROW(cfg.get("not_a_key"), ConfigError);
}

TEST(Config, ThreadCountFromEnvironment) {
  ::unsetenv(kThreadsEnv);
  EXPECT_EQ(thread_count(), 1);
  ::setenv(kThreadsEnv, "3", 1);
  EXPECT_EQ(thread_count(), 3);
  ::setenv(kThreadsEnv, "0", 1);
  EXPECT_THROW(thread_count(), ConfigError);
  ::setenv(kThreadsEnv, "two", 1);
  EXPECT_THROW(thread_count(), ConfigError);
  ::unsetenv(kThreadsEnv);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(2.4), "2.4");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.30000000000000004");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(7), "7");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Report, CsvQuoting) {
  Table t;
  t.header = {"a", "b,c"};
  t.rows = {{"plain", "say \"hi\""}, {"x\ny", ""}};
  EXPECT_EQ(to_csv(t), "a,\"b,c\"\nplain,\"say \"\"hi\"\"\"\n\"x\ny\",\n");
}

TEST(Report, PassedRequiresEveryAssertion) {
  ExperimentReport r(ExperimentConfig::parse(kExample));
  r.check("one", true);
  EXPECT_TRUE(r.passed());
  r.check("two", false, "broken");
  EXPECT_FALSE(r.passed());
}

TEST(Report, ArtifactsAreWrittenAndHashed) {
  ExperimentReport r(ExperimentConfig::parse(kExample));
  r.table = {{"x", "y"}, {{"1", "2"}}};
  r.extra_tables["more"] = {{"z"}, {{"3"}}};
  r.blobs["data.bin"] = {1, 2, 3};
  r.series.push_back({"p", "s", "x", "y", false, false, {0, 1}, {1, 2}});
  const fs::path dir = scratch_dir("artifacts");
  write_artifacts(r, dir);
  EXPECT_TRUE(fs::exists(dir / "example-1-3.csv"));
  EXPECT_TRUE(fs::exists(dir / "example-1-3.more.csv"));
  EXPECT_EQ(fs::file_size(dir / "data.bin"), 3u);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_EQ(r.artifact_hashes.size(), 3u);
  const std::vector<Series> back = read_series(dir / "report.json");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].y, (std::vector<double>{1, 2}));
  fs::remove_all(dir);
}

TEST(Baseline, KeysEmbedExperimentAndFingerprint) {
  const ExperimentConfig cfg = ExperimentConfig::parse(kExample);
  EXPECT_EQ(baseline_key(cfg, "m"), "example-1-3." + cfg.fingerprint() + ".m");
}

TEST(Baseline, SaveLoadRoundTrip) {
  BaselineStore store;
  store.set("a.b.c", 0.1 + 0.2);
  store.set("a.b.d", -3e-300);
  const fs::path dir = scratch_dir("baseline_io");
  store.save((dir / "b.txt").string());
  const BaselineStore back = BaselineStore::load((dir / "b.txt").string());
  EXPECT_EQ(back.values(), store.values());
  EXPECT_TRUE(BaselineStore::load((dir / "missing.txt").string()).values().empty());
  std::ofstream(dir / "bad.txt") << "a.b.c = twelve\n";
  EXPECT_THROW(BaselineStore::load((dir / "bad.txt").string()), std::runtime_error);
  fs::remove_all(dir);
}

TEST(Baseline, CompareAppliesMetricKinds) {
  ExperimentReport r(ExperimentConfig::parse(kExample));
  r.metrics.push_back({"upper", 1.05, MetricKind::kUpperBound, 0.1});
  r.metrics.push_back({"match", 2.0, MetricKind::kMatch, 1e-12});
  BaselineStore store;
  store.set(baseline_key(r.config, "upper"), 1.0);
  store.set(baseline_key(r.config, "match"), 2.0);
  compare_with_baselines(r, store);
  EXPECT_TRUE(r.passed());

  ExperimentReport drift(ExperimentConfig::parse(kExample));
  drift.metrics.push_back({"upper", 1.2, MetricKind::kUpperBound, 0.1});
  drift.metrics.push_back({"match", 1.9, MetricKind::kMatch, 1e-12});
  compare_with_baselines(drift, store);
  ASSERT_EQ(drift.assertions.size(), 2u);
  EXPECT_FALSE(drift.assertions[0].passed);
  EXPECT_FALSE(drift.assertions[1].passed);
  EXPECT_NE(drift.assertions[0].detail.find("drifted metric upper"), std::string::npos);
}

TEST(Baseline, ReportsKeyMismatchAcrossConfigs) {
  ExperimentReport frozen(ExperimentConfig::parse(kExample));
  frozen.metrics.push_back({"m", 1.0});
  BaselineStore store;
  freeze_baselines(frozen, store, false);

  ExperimentConfig changed = ExperimentConfig::parse(kExample);
  changed.set_seed(14);
  ExperimentReport r(changed);
  r.metrics.push_back({"m", 1.0});
  compare_with_baselines(r, store);
  ASSERT_EQ(r.assertions.size(), 1u);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.assertions[0].detail.find("baseline key mismatch"), std::string::npos);

  ExperimentReport unknown(changed);
  unknown.metrics.push_back({"other", 1.0});
  compare_with_baselines(unknown, store);
  EXPECT_NE(unknown.assertions[0].detail.find("no frozen baseline"), std::string::npos);
}

TEST(Baseline, FreezeGuardsExistingKeysAndFailingRuns) {
  ExperimentReport r(ExperimentConfig::parse(kExample));
  r.metrics.push_back({"m", 1.0});
  BaselineStore store;
  freeze_baselines(r, store, false);
  r.metrics[0].value = 2.0;
  EXPECT_THROW(freeze_baselines(r, store, false), std::runtime_error);
  EXPECT_EQ(*store.get(baseline_key(r.config, "m")), 1.0);
  freeze_baselines(r, store, true);
  EXPECT_EQ(*store.get(baseline_key(r.config, "m")), 2.0);

  r.check("bad", false);
  BaselineStore empty;
  EXPECT_THROW(freeze_baselines(r, empty, true), std::runtime_error);
  EXPECT_TRUE(empty.values().empty());
}

TEST(Plot, SkipsSeriesWithTooFewPoints) {
  const fs::path dir = scratch_dir("plots");
  std::vector<Series> series;
  series.push_back({"good", "a", "x", "y", false, false, {0, 1, 2, 3}, {1, 2, 3, 4}});
  series.push_back({"good", "b", "x", "y", false, false, {0, 1, 2, 3}, {4, 3, 2, 1}});
  series.push_back({"thin", "c", "x", "y", false, false, {0}, {1}});
  series.push_back({"logneg", "d", "x", "y", false, true, {0, 1}, {-1, 1}});
  const PlotResult result = write_plots(series, dir);
  ASSERT_EQ(result.files.size(), 1u);
  EXPECT_EQ(result.files[0].filename(), "good.svg");
  EXPECT_EQ(result.notes.size(), 2u);
  EXPECT_TRUE(write_plots({}, dir).files.empty());
  fs::remove_all(dir);
}

TEST(Plot, MarkersPerPointAndEscapedLabels) {
  std::vector<Series> series;
  series.push_back({"p", "a<b", "x", "y", true, true, {1, 10, 100, 1000}, {1, 2, 3, 4}});
  series.push_back({"p", "c&d", "x", "y", true, true, {1, 10, 100, 1000}, {4, 3, 2, 1}});
  const std::string svg = render_svg(series);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 8u);
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_NE(svg.find("c&amp;d"), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Parallel, ResultsKeepIndexOrder) {
  for (int threads : {1, 2, 5}) {
    const std::vector<int> out = parallel_map(50, [](std::size_t i) { return static_cast<int>(i * i); }, threads);
    ASSERT_EQ(out.size(), 50u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  }
  EXPECT_TRUE(parallel_map(0, [](std::size_t) { return 1; }, 4).empty());
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  const auto fn = [](std::size_t i) -> int {
    if (i == 7 || i == 3) throw std::runtime_error("index " + std::to_string(i));
    return 0;
  };
  for (int threads : {1, 4}) {
    EXPECT_EQ(error_of([&] { parallel_map(10, fn, threads); }), "index 3");
  }
}

TEST(Runner, VanishingSolutionRunIsDeterministic) {
  const ExperimentConfig cfg = ExperimentConfig::parse(kExample);
  const ExperimentReport a = run_experiment(cfg);
  const ExperimentReport b = run_experiment(cfg);
  EXPECT_TRUE(a.passed());
  EXPECT_FALSE(a.table.rows.empty());
  EXPECT_EQ(to_csv(a.table), to_csv(b.table));
}

TEST(Runner, MatrixSweepRunsWithThreads) {
  ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::kVerifyMatrixLemma);
  cfg.set_seed(7);
  const ExperimentReport one = run_experiment(cfg);
  ::setenv(kThreadsEnv, "3", 1);
  const ExperimentReport three = run_experiment(cfg);
  ::unsetenv(kThreadsEnv);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(to_csv(one.table), to_csv(three.table));
}

}  // namespace
}  // namespace bulab::experiments
