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
#include <random>

#include "bulab/carleman/conjugated_operator.hpp"
#include "bulab/carleman/matrix_lemma.hpp"
#include "bulab/field/bumps.hpp"
#include "bulab/field/quadrature.hpp"
#include "bulab/field/separable.hpp"

namespace bulab::carleman {
namespace {

CarlemanParams params(int dim, int n, double a, double k, int m = 32, double box = 6.0) {
  return {WeightParams{a, k}, Grid::make(dim, n, box), TimeGrid::make(0.02, 0.1, m)};
}

BumpSampling wide_bumps() {
  BumpSampling s;
  s.min_radius = 2.2;
  s.max_radius = 2.5;
  s.box_margin = 0.1;
  s.min_halfwidth_fraction = 0.42;
  s.max_halfwidth_fraction = 0.48;
  return s;
}

double rel_diff(const SpaceTimeField& a, const SpaceTimeField& b) { return l2_norm(a - b) / l2_norm(b); }

TEST(Potentials, HandValues) {
  EXPECT_DOUBLE_EQ(potential_v1(0.0, 2.0, 3), -160.0);
  EXPECT_DOUBLE_EQ(potential_v2(0.0, 2.0, 3), -120.0);
  EXPECT_DOUBLE_EQ(potential_v1(1.0, 2.0, 3), -24.0);
  EXPECT_DOUBLE_EQ(potential_v2(1.0, 2.0, 3), -2.0);
  EXPECT_EQ(potential_v1(4.0, 0.0, 2), 0.0);
  EXPECT_EQ(potential_v2(4.0, 0.0, 2), 0.0);
}

TEST(TimeDerivative, CentredWithZeroExtension) {
  const std::vector<double> p{1.0, 2.0, 4.0, 8.0};
  const std::vector<double> d = time_derivative(p, 0.5);
  EXPECT_DOUBLE_EQ(d[0], 2.0);   // (2 - 0) / 1
  EXPECT_DOUBLE_EQ(d[1], 3.0);   // (4 - 1) / 1
  EXPECT_DOUBLE_EQ(d[3], -4.0);  // (0 - 4) / 1
}

class OperatorIdentities : public ::testing::TestWithParam<std::tuple<int, double>> {};

TEST_P(OperatorIdentities, SplitSymmetryAndSeparable) {
  const auto [dim, k] = GetParam();
  const CarlemanParams p = params(dim, 16, 10.0, k, 16);
  const ConjugatedOperators ops(p);
  std::mt19937_64 rng(21);
  const SeparableField sv = SeparableField::from_bump(random_bump(rng, p.grid, p.time_grid, wide_bumps()), p.grid,
                                                      p.time_grid);
  const SeparableField sw = SeparableField::from_bump(random_bump(rng, p.grid, p.time_grid, wide_bumps()), p.grid,
                                                      p.time_grid);
  const SpaceTimeField v = sv.to_frames();
  const SpaceTimeField w = sw.to_frames();

  EXPECT_LT(rel_diff(ops.apply_J(v) + ops.apply_K(v), ops.apply_A(v)), 1e-13);

  const double jvw = inner_product(ops.apply_J(v), w);
  const double vjw = inner_product(v, ops.apply_J(w));
  EXPECT_NEAR(jvw, vjw, 1e-11 * std::abs(jvw));

  EXPECT_LT(rel_diff(ops.apply_A(sv).to_frames(), ops.apply_A(v)), 1e-13);
  EXPECT_LT(rel_diff(ops.apply_bracket_direct(sv).to_frames(), ops.apply_bracket_direct(v)), 1e-12);
  EXPECT_LT(rel_diff(ops.apply_bracket_explicit(sv).to_frames(), ops.apply_bracket_explicit(v)), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(DimsAndExponents, OperatorIdentities,
                         ::testing::Combine(::testing::Values(2, 3), ::testing::Values(0.0, 1.0, 2.0)));

TEST(Bracket, DirectConvergesToClosedForm) {
  for (double k : {0.0, 2.0}) {
    std::mt19937_64 rng(8);
    const CarlemanParams coarse = params(2, 48, 10.0, k, 64);
    const CarlemanParams fine = params(2, 96, 10.0, k, 128);
    const BumpSpec spec = random_bump(rng, coarse.grid, coarse.time_grid, wide_bumps());
    double errors[2];
    int i = 0;
    for (const CarlemanParams* p : {&coarse, &fine}) {
      const ConjugatedOperators ops(*p);
      const SeparableField v = SeparableField::from_bump(spec, p->grid, p->time_grid);
      SeparableField d = ops.apply_bracket_direct(v);
      const SeparableField e = ops.apply_bracket_explicit(v);
      d -= e;
      errors[i++] = d.norm() / e.norm();
    }
    EXPECT_LT(errors[0], 0.05) << "k=" << k;
    EXPECT_GE(std::log2(errors[0] / errors[1]), 1.9) << "k=" << k;
  }
}

TEST(Bracket, RejectsMismatchedLattice) {
  const ConjugatedOperators ops(params(2, 16, 10.0, 1.0));
  const SpaceTimeField wrong(Grid::make(2, 32, 6.0), TimeGrid::make(0.02, 0.1, 32));
  EXPECT_THROW(ops.apply_J(wrong), std::invalid_argument);
}

TEST(VTransform, RoundTripAndLogScaling) {
  const CarlemanParams small = params(2, 16, 10.0, 1.0, 16);
  std::mt19937_64 rng(3);
  const SpaceTimeField u = make_spacetime_bump(random_bump(rng, small.grid, small.time_grid), small.grid,
                                               small.time_grid);
  const LogScaledField v = v_transform(u, small);
  EXPECT_FALSE(v.rescaled);
  EXPECT_LT(rel_diff(inverse_v_transform(v, small), u), 1e-14);

  // Log range of h^{-(a+1)} over the window is about 460 at a = 300.
  CarlemanParams big = small;
  big.weight.a = 300.0;
  const LogScaledField vb = v_transform(u, big);
  EXPECT_TRUE(vb.rescaled);
  EXPECT_TRUE(vb.values.all_finite());
  EXPECT_GT(vb.log_scale, 1000.0);
  EXPECT_LT(rel_diff(inverse_v_transform(vb, big), u), 1e-12);

  // Past the double range the late frames vanish but nothing turns NaN.
  big.weight.a = 1000.0;
  const LogScaledField vh = v_transform(u, big);
  EXPECT_GT(vh.log_scale, 3900.0);
  EXPECT_TRUE(inverse_v_transform(vh, big).all_finite());
}

TEST(ConjugationEquivalence, RatioInsideWindow) {
  // Late window and fine steps keep the discrete d_t of the weight resolved.
  for (double a : {10.0, 400.0}) {
    const CarlemanParams p{WeightParams{a, 1.0}, Grid::make(2, 32, 6.0), TimeGrid::make(0.25, 0.5, 4096)};
    std::mt19937_64 rng(17);
    const SpaceTimeField u = make_spacetime_bump(random_bump(rng, p.grid, p.time_grid, wide_bumps()), p.grid,
                                                 p.time_grid);
    const ConjugationEquivalence eq = conjugation_equivalence(u, p);
    EXPECT_EQ(eq.rescaled, a >= kLogDomainThreshold);
    EXPECT_DOUBLE_EQ(eq.lower, std::exp(2 * 0.25));
    EXPECT_DOUBLE_EQ(eq.upper, std::exp(2 * 0.5));
    EXPECT_GE(eq.ratio, eq.lower * (1.0 - 1e-9)) << "a=" << a;
    EXPECT_LE(eq.ratio, eq.upper * (1.0 + 1e-9)) << "a=" << a;
  }
}

TEST(MatrixCommutator, NilpotentTwoByTwoOracle) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  // [J,K] = diag(-1/2, 1/2).
  Eigen::VectorXd e1(2), e2(2);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  const LemmaSlack s1 = lemma_slack(a, e1);
  EXPECT_DOUBLE_EQ(s1.norm_ax_squared, 0.0);
  EXPECT_DOUBLE_EQ(s1.bracket_form, -0.5);
  const LemmaSlack s2 = lemma_slack(a, e2);
  EXPECT_DOUBLE_EQ(s2.norm_ax_squared, 1.0);
  EXPECT_DOUBLE_EQ(s2.bracket_form, 0.5);
  EXPECT_DOUBLE_EQ(s2.slack, 0.5);
  EXPECT_TRUE(s2.holds());
}

TEST(MatrixCommutator, NormalMatricesHaveZeroBracket) {
  std::mt19937_64 rng(2);
  for (MatrixClass c : {MatrixClass::kSymmetric, MatrixClass::kSkew}) {
    const Eigen::MatrixXd a = random_matrix(c, 6, rng);
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(6, -1.0, 2.0);
    EXPECT_NEAR(lemma_slack(a, x).bracket_form, 0.0, 1e-12) << to_string(c);
  }
}

TEST(MatrixCommutator, RandomShapes) {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd s = random_matrix(MatrixClass::kSymmetric, 5, rng);
  EXPECT_EQ((s - s.transpose()).norm(), 0.0);
  const Eigen::MatrixXd k = random_matrix(MatrixClass::kSkew, 5, rng);
  EXPECT_EQ((k + k.transpose()).norm(), 0.0);
  const Eigen::MatrixXd n = random_matrix(MatrixClass::kNilpotent, 5, rng);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j <= i; ++j) EXPECT_EQ(n(i, j), 0.0);
  }
}

TEST(MatrixCommutator, SeededSweepPassesAndIsDeterministic) {
  const LemmaSweepReport a = lemma_random_sweep(50, 20, 2, 16, 7);
  const LemmaSweepReport b = lemma_random_sweep(50, 20, 2, 16, 7);
  EXPECT_TRUE(a.passed());
  ASSERT_EQ(a.rows.size(), 4u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].totals.trials, 1000);
    EXPECT_EQ(a.rows[i].totals.worst_normalized_slack, b.rows[i].totals.worst_normalized_slack);
  }
  EXPECT_THROW(lemma_random_sweep(1, 1, 5, 4, 0), std::invalid_argument);
}

}  // namespace
}  // namespace bulab::carleman
