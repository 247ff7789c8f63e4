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
#include <vector>

#include "bulab/carleman/conjugated_operator.hpp"
#include "bulab/field/weights.hpp"
#include "bulab/inequality/cutoff.hpp"
#include "bulab/inequality/cz_estimate.hpp"
#include "bulab/inequality/families.hpp"
#include "bulab/inequality/theorem.hpp"

namespace bulab::inequality {
namespace {

// For u = phi(t) (constant in space) and k = 0 both sides reduce to sums in
// time: lhs = L^n sum tau_m h^{-(2a+1)} (a+1) phi^2, rhs = L^n sum tau_m h^{-2a} (D phi)^2.
struct ConstantFieldOracle {
  double log_lhs;
  double log_rhs;
};

ConstantFieldOracle constant_field_oracle(const Grid& g, const TimeGrid& tg, const TemporalBump& phi, double a) {
  std::vector<double> p(tg.frames());
  for (int m = 0; m < tg.frames(); ++m) p[m] = phi(tg.time(m));
  const std::vector<double> dp = carleman::time_derivative(p, tg.dt());
  double max_l = -HUGE_VAL;
  double max_r = -HUGE_VAL;
  std::vector<double> ll, lr;
  for (int m = 0; m < tg.frames(); ++m) {
    const double lh = log_temporal_weight(tg.time(m));
    const double vol = std::log(std::pow(g.box_length(), g.dim()) * tg.trapezoid_weight(m));
    ll.push_back(p[m] != 0.0 ? vol - (2 * a + 1) * lh + std::log((a + 1) * p[m] * p[m]) : -HUGE_VAL);
    lr.push_back(dp[m] != 0.0 ? vol - 2 * a * lh + std::log(dp[m] * dp[m]) : -HUGE_VAL);
    max_l = std::max(max_l, ll.back());
    max_r = std::max(max_r, lr.back());
  }
  double sl = 0.0, sr = 0.0;
  for (std::size_t i = 0; i < ll.size(); ++i) {
    sl += std::exp(ll[i] - max_l);
    sr += std::exp(lr[i] - max_r);
  }
  return {max_l + std::log(sl), max_r + std::log(sr)};
}

TEST(WeightedEstimate, ConstantFieldMatchesOracle) {
  const Grid g = Grid::make(2, 16, 4.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 32);
  const TemporalBump phi{0.06, 0.035, 1.0};
  const SpaceTimeField u = spatially_constant_field(g, tg, phi);
  for (double a : {10.0, 150.0, 1000.0, 10000.0}) {
    const ConstantFieldOracle o = constant_field_oracle(g, tg, phi, a);
    const WeightParams w{a, 0.0};
    EXPECT_NEAR(theorem_lhs(u, w).log_abs, o.log_lhs, 1e-9 * std::abs(o.log_lhs)) << "a=" << a;
    EXPECT_NEAR(theorem_rhs(u, w).log_abs, o.log_rhs, 1e-9 * std::abs(o.log_rhs)) << "a=" << a;
  }
}

TEST(WeightedEstimate, DoubleConventionDoublesTheExponent) {
  const Grid g = Grid::make(2, 16, 8.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 16);
  const std::vector<FamilyMember> fam = standard_family(g, tg, 4, {1, 2, 0, 0});
  const LogScalar a = theorem_lhs(fam[0].u, {10.0, 1.0, ExponentConvention::kDouble});
  const LogScalar b = theorem_lhs(fam[0].u, {10.0, 2.0, ExponentConvention::kSingle});
  EXPECT_NEAR(a.log_abs, b.log_abs, 1e-12 * std::abs(b.log_abs));
}

TEST(WeightedEstimate, SweepShapeAndMonotonicity) {
  const Grid g = Grid::make(2, 24, 8.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 24);
  const std::vector<FamilyMember> fam = standard_family(g, tg, 2026, {3, 2, 2, 1});
  ASSERT_EQ(fam.size(), 6u);
  EXPECT_EQ(fam[0].id, "mix-0");
  EXPECT_EQ(fam[3].id, "sep-0");
  EXPECT_EQ(fam[5].id, "cal-0");
  const std::vector<double> as{10.0, 100.0, 1000.0, 10000.0};
  const RatioReport r = theorem_ratio_sweep(fam, as, 2.0);
  EXPECT_EQ(r.rows.size(), 24u);
  EXPECT_TRUE(r.skipped.empty());
  EXPECT_TRUE(r.all_finite());
  EXPECT_TRUE(r.lhs_monotone_in_a());
  EXPECT_GT(r.c_emp, 0.0);
  for (const RatioRow& row : r.rows) EXPECT_EQ(row.log_domain, row.a >= carleman::kLogDomainThreshold);
}

TEST(WeightedEstimate, ZeroFieldIsSkipped) {
  const Grid g = Grid::make(2, 16, 4.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 8);
  const std::vector<FamilyMember> fam{{"zero", SpaceTimeField(g, tg)}};
  const std::vector<double> as{10.0};
  const RatioReport r = theorem_ratio_sweep(fam, as, 1.0);
  EXPECT_TRUE(r.rows.empty());
  ASSERT_EQ(r.skipped.size(), 1u);
}

TEST(Families, PlateauAndCutoff) {
  EXPECT_EQ(plateau(0.0, 0.0, 1.0, 0.25), 0.0);
  EXPECT_EQ(plateau(0.5, 0.0, 1.0, 0.25), 1.0);
  EXPECT_EQ(plateau(1.0, 0.0, 1.0, 0.25), 0.0);
  const Grid g = Grid::make(2, 32, 16.0);
  const ScalarField eta = radial_cutoff(g, 2.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    const double r = std::hypot(x[0], x[1]);
    if (r <= 2.0) { EXPECT_EQ(eta[i], 1.0); }
    if (r >= 4.0) { EXPECT_EQ(eta[i], 0.0); }
  }
}

TEST(Families, TensorSpecsAreGridIndependent) {
  const Grid coarse = Grid::make(3, 16, 8.0);
  const Grid fine = Grid::make(3, 32, 8.0);
  const auto specs = tensor_bump_specs(coarse, 3, 9);
  const auto again = tensor_bump_specs(coarse, 3, 9);
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_EQ(specs[2].coefficients, again[2].coefficients);
  const TensorField f = make_tensor(specs[0], fine);
  for (int j = 0; j < 3; ++j) {
    for (int l = 0; l < 3; ++l) EXPECT_EQ(f(j, l).data(), f(l, j).data());
  }
  EXPECT_GT(f(0, 0).max_abs(), 0.0);
}

TEST(CzEstimate, ExponentRange) {
  EXPECT_NO_THROW(require_cz_exponent(0.0));
  EXPECT_NO_THROW(require_cz_exponent(2.4));
  EXPECT_THROW(require_cz_exponent(2.5), DomainError);
  EXPECT_THROW(require_cz_exponent(-0.1), DomainError);
}

TEST(CzEstimate, UnweightedRatioAtMostOne) {
  const Grid g = Grid::make(3, 24, 8.0);
  for (const TensorField& f : tensor_bump_family(g, 3, 12)) {
    EXPECT_LE(cz_ratio(f, 0.0), 1.0 + 1e-10);
    const CzDensities d = cz_densities(f);
    for (double k : {0.0, 1.0, 2.4}) {
      EXPECT_NEAR(cz_weighted(d.lhs, k), cz_lhs(f, k), 1e-12 * cz_lhs(f, k));
      EXPECT_NEAR(cz_weighted(d.rhs, k), cz_rhs(f, k), 1e-12 * cz_rhs(f, k));
    }
  }
}

TEST(CzEstimate, ApProbeRows) {
  ApProbeOptions o;
  o.dim = 2;
  const std::vector<double> radii{2.0, 3.0};
  const ApProbeReport r = ap_failure_probe(2.0, radii, o);
  ASSERT_EQ(r.rows.size(), 2u);
  for (const ApProbeRow& row : r.rows) {
    EXPECT_TRUE(std::isfinite(row.riesz_ratio));
    EXPECT_TRUE(std::isfinite(row.divergence_ratio));
  }
  const ApProbeReport beyond = ap_failure_probe(3.0, radii, o);
  EXPECT_TRUE(std::isnan(beyond.rows[0].divergence_ratio));
  const std::vector<double> tiny{0.5};
  EXPECT_THROW(ap_failure_probe(2.0, tiny, o), DomainError);
}

TEST(Cutoff, ConvergesOnConstantField) {
  const Grid g = Grid::make(2, 128, 40.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 16);
  const SpaceTimeField u = spatially_constant_field(g, tg, {0.06, 0.035, 1.0});
  const std::vector<double> ms{1.0, 2.0, 4.0, 8.0};
  const CutoffReport r = cutoff_convergence_study(u, ms, {10.0, 2.0});
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_LT(r.lhs_change, 0.05);
  EXPECT_LT(r.rhs_change, 0.05);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_GT(r.rows[i].lhs.log_abs, r.rows[i - 1].lhs.log_abs);
  const std::vector<double> too_big{10.0};
  EXPECT_THROW(cutoff_convergence_study(u, too_big, {10.0, 2.0}), DomainError);
}

}  // namespace
}  // namespace bulab::inequality
