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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bulab/experiments/baseline.hpp"
#include "bulab/experiments/config.hpp"
#include "bulab/experiments/report.hpp"
#include "bulab/experiments/runner.hpp"
#include "bulab/field/fields.hpp"
#include "bulab/field/grid.hpp"
#include "bulab/field/quadrature.hpp"
#include "bulab/spectral/operators.hpp"

namespace {

using namespace bulab;
using namespace bulab::experiments;

const std::string kSource = BULAB_SOURCE_DIR;
const std::string kBaselines = kSource + "/baselines/baselines.txt";

struct Outcome {
  bool passed = false;
  std::string detail;
};

ExperimentConfig load_config(const std::string& name) { return ExperimentConfig::load(kSource + "/configs/" + name + ".cfg"); }

std::string first_failure(const ExperimentReport& r) {
  for (const Assertion& a : r.assertions) {
    if (!a.passed) return a.name + (a.detail.empty() ? "" : ": " + a.detail);
  }
  return {};
}

/// Runs an experiment and compares its metrics against the frozen baselines.
ExperimentReport run_checked(const std::string& name) {
  ExperimentReport r = run_experiment(load_config(name));
  if (!r.metrics.empty()) compare_with_baselines(r, BaselineStore::load(kBaselines));
  return r;
}

Outcome from_report(const ExperimentReport& r) {
  const std::string failure = first_failure(r);
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(r.assertions.size()) + " assertions"};
}

std::string all_csv(const ExperimentReport& r) {
  std::string out = to_csv(r.table);
  for (const auto& [name, table] : r.extra_tables) out += name + "\n" + to_csv(table);
  return out;
}

ScalarField random_field(const Grid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ScalarField f(g);
  for (double& v : f.data()) v = normal(rng);
  return f;
}

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_diff(const VectorField& a, const VectorField& b) {
  double m = 0.0;
  for (int d = 0; d < a.dim(); ++d) m = std::max(m, max_diff(a[d], b[d]));
  return m;
}

double vector_max_abs(const VectorField& u) {
  double m = 0.0;
  for (int d = 0; d < u.dim(); ++d) m = std::max(m, u[d].max_abs());
  return m;
}

Outcome operator_identities() {
  std::mt19937_64 rng(20260501);
  double idem = 0.0, div = 0.0, semi = 0.0, trace = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 3;
    const Grid g = Grid::make(dim, dim == 2 ? 32 : 16, 1.0 + 0.1 * trial);
    std::vector<ScalarField> comps;
    for (int d = 0; d < dim; ++d) comps.push_back(random_field(g, rng));
    const VectorField u(std::move(comps));
    const double scale = vector_max_abs(u);

    const VectorField p = spectral::leray_project(u);
    idem = std::max(idem, max_diff(spectral::leray_project(p), p) / scale);
    div = std::max(div, l2_norm(spectral::divergence(p)) / l2_norm(u));

    const ScalarField& f = u[0];
    const double fs = f.max_abs();
    const double s = 0.01 * (1 + trial % 5), t = 0.02 * (1 + trial % 3);
    semi = std::max(semi, max_diff(spectral::heat_semigroup(spectral::heat_semigroup(f, s), t),
                                   spectral::heat_semigroup(f, s + t)) / fs);

    ScalarField sum(g);
    for (int i = 0; i < dim; ++i) sum += spectral::riesz_second(f, i, i);
    ScalarField expected = f;
    const double mean = f.mean();
    for (double& v : expected.data()) v -= mean;
    trace = std::max(trace, max_diff(sum, expected) / fs);
  }
  const bool ok = idem <= 1e-12 && div <= 1e-10 && semi <= 1e-12 && trace <= 1e-12;
  char buf[256];
  std::snprintf(buf, sizeof buf, "idempotence %.2e, divergence %.2e, semigroup %.2e, riesz trace %.2e", idem, div,
                semi, trace);
  return {ok, buf};
}

Outcome energy_from(const std::vector<const ExperimentReport*>& reports) {
  int count = 0;
  for (const ExperimentReport* r : reports) {
    for (const Assertion& a : r->assertions) {
      if (a.name.find("energy_monotone") == std::string::npos) continue;
      ++count;
      if (!a.passed) return {false, a.name + ": " + a.detail};
    }
  }
  if (count == 0) return {false, "no trajectory reported an energy check"};
  return {true, std::to_string(count) + " trajectories"};
}

Outcome determinism() {
  std::string detail;
  for (const char* name : {"verify-matrix-lemma", "example-1-3", "nse-separation", "verify-weighted"}) {
    const ExperimentConfig cfg = load_config(name);
    const std::string a = all_csv(run_experiment(cfg));
    const std::string b = all_csv(run_experiment(cfg));
    if (a != b) return {false, std::string(name) + " CSV differs between runs"};
    detail += std::string(detail.empty() ? "" : ", ") + name;
  }
  return {true, "byte-identical CSV: " + detail};
}

int failures = 0;

void report_line(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0.0 && secs > limit_seconds) {
    o.passed = false;
    o.detail += " (runtime limit " + format_number(limit_seconds) + " s exceeded)";
  }
  if (!o.passed) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  report_line(1, "matrix commutator inequality", 10, [] { return from_report(run_checked("verify-matrix-lemma")); });
  report_line(2, "direct vs closed-form bracket", 600, [] { return from_report(run_checked("verify-commutator")); });
  report_line(3, "weighted estimate sweep", 900, [] { return from_report(run_checked("verify-weighted")); });
  report_line(4, "weighted CZ estimate", 600, [] { return from_report(run_checked("verify-cz")); });
  report_line(5, "operator identities", 60, operator_identities);

  std::vector<ExperimentReport> trajectories;
  report_line(6, "mild solver exactness", 120, [&] {
    trajectories.push_back(run_checked("nse-shear"));
    return from_report(trajectories.back());
  });
  report_line(8, "axisymmetry preservation", 600, [&] {
    trajectories.push_back(run_checked("nse-axisym"));
    return from_report(trajectories.back());
  });
  report_line(7, "energy dissipation", 0, [&] {
    std::vector<const ExperimentReport*> refs;
    for (const ExperimentReport& r : trajectories) refs.push_back(&r);
    return energy_from(refs);
  });
  report_line(9, "explicit counterexample", 1, [] { return from_report(run_checked("example-1-3")); });
  report_line(10, "separation consistency", 300, [] { return from_report(run_checked("nse-separation")); });
  report_line(11, "determinism", 0, determinism);

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
  return failures == 0 ? 0 : 1;
}
