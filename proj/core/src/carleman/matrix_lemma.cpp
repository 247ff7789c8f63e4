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

#include "bulab/carleman/matrix_lemma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bulab::carleman {

namespace {

struct Prepared {
  Eigen::MatrixXd bracket;
  double op_norm2 = 0.0;  // ||A||_2^2
};

Prepared prepare(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd j = 0.5 * (a + a.transpose());
  const Eigen::MatrixXd k = 0.5 * (a - a.transpose());
  const double op = a.size() == 0 ? 0.0 : a.jacobiSvd().singularValues()(0);
  return {j * k - k * j, op * op};
}

LemmaSlack slack_with(const Eigen::MatrixXd& a, const Prepared& p, const Eigen::VectorXd& x) {
  LemmaSlack s;
  s.norm_ax_squared = (a * x).squaredNorm();
  s.bracket_form = x.dot(p.bracket * x);
  s.slack = s.norm_ax_squared - s.bracket_form;
  s.tolerance = kLemmaRelativeTolerance * x.squaredNorm() * p.op_norm2;
  return s;
}

}  // namespace

LemmaSlack lemma_slack(const Eigen::MatrixXd& a, const Eigen::VectorXd& x) {
  if (a.rows() != a.cols() || a.cols() != x.size()) {
    throw std::invalid_argument("matrix must be square and match the vector length");
  }
  return slack_with(a, prepare(a), x);
}

std::string_view to_string(MatrixClass c) noexcept {
  switch (c) {
    case MatrixClass::kDense: return "dense";
    case MatrixClass::kSymmetric: return "symmetric";
    case MatrixClass::kSkew: return "skew";
    case MatrixClass::kNilpotent: return "nilpotent";
  }
  return "unknown";
}

Eigen::MatrixXd random_matrix(MatrixClass c, int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = normal(rng);
  switch (c) {
    case MatrixClass::kDense: return m;
    case MatrixClass::kSymmetric: return 0.5 * (m + m.transpose());
    case MatrixClass::kSkew: return 0.5 * (m - m.transpose());
    case MatrixClass::kNilpotent: return m.triangularView<Eigen::StrictlyUpper>();
  }
  return m;
}

namespace {

void check_against(const Eigen::MatrixXd& a, int trials, std::mt19937_64& rng, LemmaReport& report) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  std::normal_distribution<double> normal;
  const Prepared p = prepare(a);
  Eigen::VectorXd x(a.cols());
  for (int t = 0; t < trials; ++t) {
    for (int i = 0; i < x.size(); ++i) x(i) = normal(rng);
    const LemmaSlack s = slack_with(a, p, x);
    const double scale = x.squaredNorm() * p.op_norm2;
    const double normalized = scale > 0.0 ? s.slack / scale : 0.0;
    if (report.trials == 0) {
      report.worst_normalized_slack = normalized;
    } else {
      report.worst_normalized_slack = std::min(report.worst_normalized_slack, normalized);
    }
    ++report.trials;
    if (!s.holds()) ++report.failures;
  }
}

}  // namespace

LemmaReport lemma_commutator_check(const Eigen::MatrixXd& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  LemmaReport report;
  check_against(a, trials, rng, report);
  return report;
}

bool LemmaSweepReport::passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ClassRow& r) { return r.totals.passed(); });
}

LemmaSweepReport lemma_random_sweep(int matrices, int vectors, int min_dim, int max_dim,
                                    std::uint64_t seed) {
  if (matrices < 1 || vectors < 1) throw std::invalid_argument("counts must be positive");
  if (min_dim < 1 || max_dim < min_dim) throw std::invalid_argument("invalid dimension range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_dim(min_dim, max_dim);
  LemmaSweepReport out;
  for (MatrixClass c : kAllMatrixClasses) {
    LemmaSweepReport::ClassRow row{c, 0, {}};
    for (int i = 0; i < matrices; ++i) {
      const Eigen::MatrixXd a = random_matrix(c, pick_dim(rng), rng);
      check_against(a, vectors, rng, row.totals);
      ++row.matrices;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace bulab::carleman
