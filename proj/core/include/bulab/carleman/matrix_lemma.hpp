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
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bulab::carleman {

/// For A = J + K with J = (A + A^T)/2 and K = (A - A^T)/2:
///   ||Ax||^2 >= <(JK - KJ) x, x>.
struct LemmaSlack {
  double norm_ax_squared = 0.0;
  double bracket_form = 0.0;  ///< <[J,K] x, x>
  double slack = 0.0;         ///< norm_ax_squared - bracket_form
  double tolerance = 0.0;     ///< 1e-9 ||x||^2 ||A||_2^2
  bool holds() const noexcept { return slack >= -tolerance; }
};

inline constexpr double kLemmaRelativeTolerance = 1e-9;

LemmaSlack lemma_slack(const Eigen::MatrixXd& a, const Eigen::VectorXd& x);

enum class MatrixClass { kDense, kSymmetric, kSkew, kNilpotent };
std::string_view to_string(MatrixClass c) noexcept;
inline constexpr MatrixClass kAllMatrixClasses[] = {MatrixClass::kDense, MatrixClass::kSymmetric,
                                                    MatrixClass::kSkew, MatrixClass::kNilpotent};

/// Standard normal entries shaped to the class; nilpotent matrices are
/// strictly upper triangular.
Eigen::MatrixXd random_matrix(MatrixClass c, int dim, std::mt19937_64& rng);

struct LemmaReport {
  long trials = 0;
  long failures = 0;
  /// min over trials of slack / (||x||^2 ||A||_2^2).
  double worst_normalized_slack = 0.0;
  bool passed() const noexcept { return failures == 0; }
};

/// Checks the inequality for one matrix against `trials` random x.
LemmaReport lemma_commutator_check(const Eigen::MatrixXd& a, int trials, std::uint64_t seed);

struct LemmaSweepReport {
  struct ClassRow {
    MatrixClass matrix_class;
    long matrices = 0;
    LemmaReport totals;
  };
  std::vector<ClassRow> rows;
  bool passed() const noexcept;
};

/// `matrices` random matrices per class with dims uniform in [min_dim, max_dim],
/// each checked against `vectors` random x.
LemmaSweepReport lemma_random_sweep(int matrices, int vectors, int min_dim, int max_dim,
                                    std::uint64_t seed);

}  // namespace bulab::carleman
