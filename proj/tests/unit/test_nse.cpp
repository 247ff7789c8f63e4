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
#include <numbers>
#include <vector>

#include "bulab/field/quadrature.hpp"
#include "bulab/nse/exact_flows.hpp"
#include "bulab/nse/mild_solver.hpp"
#include "bulab/nse/separation.hpp"
#include "bulab/nse/symmetry.hpp"
#include "bulab/spectral/operators.hpp"

namespace bulab::nse {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_diff(const VectorField& a, const VectorField& b) {
  VectorField d = a;
  d -= b;
  return d.max_magnitude();
}

TEST(Solver, ShearFlowIsReproduced) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  for (Scheme s : {Scheme::kIntegratingFactorRk2, Scheme::kIntegratingFactorRk4}) {
    MildSolverConfig cfg;
    cfg.dt = 0.01;
    cfg.total_time = 0.2;
    cfg.scheme = s;
    const Trajectory tr = solve(shear_flow(g, 0.0), cfg);
    EXPECT_FALSE(tr.aborted);
    EXPECT_NEAR(tr.final_time, 0.2, 1e-15);
    EXPECT_LT(max_diff(tr.final_state, shear_flow(g, 0.2)), 1e-13) << to_string(s);
  }
}

TEST(Solver, RandomDataStaysSolenoidalAndDissipates) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  const VectorField u0 = random_solenoidal_field(g, 1.0, 42);
  MildSolverConfig cfg;
  cfg.dt = 0.01;
  cfg.total_time = 0.1;
  const Trajectory tr = solve(u0, cfg);
  ASSERT_EQ(tr.diagnostics.size(), 11u);
  for (std::size_t i = 1; i < tr.diagnostics.size(); ++i) {
    EXPECT_LE(tr.diagnostics[i].energy, tr.diagnostics[i - 1].energy * (1.0 + 1e-12));
    EXPECT_LE(tr.diagnostics[i].div_norm, 1e-10 * std::sqrt(2.0 * tr.diagnostics[i].energy));
  }
  EXPECT_LE(l2_norm(spectral::divergence(tr.final_state)), 1e-10 * l2_norm(tr.final_state));
}

TEST(Solver, StepMildMatchesOneStepSolve) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  const VectorField u0 = random_solenoidal_field(g, 1.0, 1);
  MildSolverConfig cfg;
  cfg.dt = 0.01;
  cfg.total_time = 0.01;
  EXPECT_LT(max_diff(step_mild(u0, 0.01, cfg), solve(u0, cfg).final_state), 1e-15);
}

TEST(Solver, StoresRequestedStates) {
  const Grid g = Grid::make(3, 8, kTwoPi);
  MildSolverConfig cfg;
  cfg.dt = 0.01;
  cfg.total_time = 0.05;
  cfg.store_every = 2;
  const Trajectory tr = solve(random_solenoidal_field(g, 1.0, 3), cfg);
  EXPECT_EQ(tr.states.size(), tr.times.size());
  EXPECT_GE(tr.states.size(), 3u);
}

TEST(Solver, RejectsCflViolationAndBackwardHeat) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  MildSolverConfig cfg;
  cfg.dt = 1.0;
  const MildSolver solver(g, cfg);
  const MildSolver::State s = solver.to_state(random_solenoidal_field(g, 10.0, 5));
  EXPECT_THROW(solver.step(s, 1.0), DomainError);
  EXPECT_THROW(solver.heat(s, -0.1), DomainError);
  MildSolverConfig bad;
  bad.dt = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(parse_scheme("euler"), std::invalid_argument);
}

TEST(Solver, ForcingPotentialDrivesFlow) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  TensorField f(g);
  f(0, 1) = ScalarField::sample(g, [](const Point& x) { return std::cos(x[1]); });
  MildSolverConfig cfg;
  cfg.dt = 0.01;
  cfg.total_time = 0.05;
  cfg.forcing = f;
  const Trajectory tr = solve(VectorField(g), cfg);
  // d_t u1 = d_2 F_12 + Delta u1 with u1(0) = 0: u1 = -(1 - e^{-t}) sin x2.
  VectorField exact(g);
  exact[0] = ScalarField::sample(g, [](const Point& x) { return -(1.0 - std::exp(-0.05)) * std::sin(x[1]); });
  EXPECT_LT(max_diff(tr.final_state, exact), 1e-9);
}

TEST(Picard, ContractsToTheSolverState) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  const VectorField u0 = random_solenoidal_field(g, 0.5, 7);
  MildSolverConfig cfg;
  cfg.dt = 0.001;
  cfg.total_time = 0.05;
  const PicardResult p = picard_iterate(u0, 0.05, 6, 50, cfg);
  ASSERT_EQ(p.distances.size(), 6u);
  for (std::size_t i = 1; i < p.distances.size(); ++i) EXPECT_LT(p.distances[i], p.distances[i - 1]);
  VectorField d = p.state;
  d -= solve(u0, cfg).final_state;
  EXPECT_LT(l2_norm(d), 1e-4 * l2_norm(u0));
}

TEST(Symmetry, SwirlOfPureFields) {
  const Grid g = Grid::make(3, 32, 8.0);
  EXPECT_NEAR(swirl_fraction(azimuthal_field(g, 1.0)), 1.0, 1e-14);
  EXPECT_LT(swirl_fraction(radial_field(g, 1.0)), 1e-28);
  EXPECT_LT(swirl_fraction(axisymmetric_no_swirl_field(g, 1.0, 1.0)), 1e-8);
}

TEST(Symmetry, DecomposeAndReassemble) {
  const Grid g = Grid::make(3, 16, 8.0);
  const VectorField u = random_solenoidal_field(g, 1.0, 9);
  const CylindricalDecomposition c = cylindrical_decompose(u);
  const VectorField back = reassemble(c);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!c.valid[i]) continue;
    for (int d = 0; d < 3; ++d) EXPECT_NEAR(back[d][i], u[d][i], 1e-14);
  }
  EXPECT_THROW(cylindrical_decompose(VectorField(Grid::make(2, 16, 8.0))), std::invalid_argument);
}

TEST(Symmetry, InterpolationAndDefect) {
  const Grid g = Grid::make(3, 32, 8.0);
  const VectorField u = axisymmetric_no_swirl_field(g, 1.0, 1.0);
  const std::size_t idx = g.ravel({10, 20, 5});
  const Point at = interpolate(u, g.point(idx));
  for (int d = 0; d < 3; ++d) EXPECT_NEAR(at[d], u[d][idx], 1e-15);
  const std::vector<double> angles{0.5, 1.0, 2.0};
  const double sym = symmetry_defect(u, angles);
  const double asym = symmetry_defect(random_solenoidal_field(g, u.max_magnitude(), 2), angles);
  EXPECT_LT(sym, 0.1 * asym);
}

TEST(Separation, DistanceProperties) {
  const Grid g = Grid::make(3, 16, 4.0 * std::numbers::pi);
  const VectorField u = axisymmetric_no_swirl_field(g, 1.0, 1.0);
  const VectorField v = random_solenoidal_field(g, 0.1, 4);
  EXPECT_EQ(weighted_distance(u, u, 2.0), 0.0);
  EXPECT_EQ(weighted_distance(u, u + v, 2.0), weighted_distance(u + v, u, 2.0));
  MildSolverConfig cfg;
  cfg.dt = 0.01;
  cfg.total_time = 0.05;
  const SeparationReport same = separation_track(u, u, cfg, 2.0);
  for (double d : same.distances) EXPECT_EQ(d, 0.0);
  const SeparationReport apart = separation_track(u, u + v, cfg, 2.0);
  EXPECT_FALSE(apart.truncated);
  EXPECT_EQ(apart.distances.size(), 6u);
  EXPECT_GT(apart.final_distance, 0.0);
}

TEST(ExactFlows, RandomSolenoidalField) {
  const Grid g = Grid::make(3, 16, kTwoPi);
  const VectorField a = random_solenoidal_field(g, 2.0, 11);
  const VectorField b = random_solenoidal_field(g, 2.0, 11);
  EXPECT_EQ(max_diff(a, b), 0.0);
  EXPECT_NEAR(a.max_magnitude(), 2.0, 1e-14);
  EXPECT_LE(l2_norm(spectral::divergence(a)), 1e-12 * l2_norm(a));
}

TEST(VanishingSolution, VanishingProfile) {
  const ScalarProfile h = cubic_vanishing_profile(1.0, 0.0, 0.25);
  EXPECT_EQ(h.value(1.0), 0.0);
  EXPECT_EQ(h.derivative(1.0), 0.0);
  EXPECT_EQ(h.value(0.0), 0.0);
  EXPECT_NEAR(h.value(0.5), 0.125, 1e-15);
  const double e = 1e-6;
  for (double t : {0.1, 0.2, 0.6}) {
    EXPECT_NEAR(h.derivative(t), (h.value(t + e) - h.value(t - e)) / (2 * e), 1e-7);
  }
  EXPECT_THROW(cubic_vanishing_profile(1.0, 0.9, 0.25), std::invalid_argument);
}

TEST(VanishingSolution, ResidualOracle) {
  const ScalarProfile h = cubic_vanishing_profile(1.0);
  std::vector<SpaceTimePoint> pts;
  for (int i = 0; i <= 100; ++i) pts.push_back({{0.1 * i, -0.2, 0.3}, i / 100.0});
  const Example13Report exact = example_1_3_residual(h, pts);
  EXPECT_EQ(exact.max_residual, 0.0);
  EXPECT_TRUE(exact.vanishes_at_final_time);
  EXPECT_TRUE(exact.nontrivial_before);
  const Example13Report wrong = example_1_3_residual(h, pts, 1.01);
  EXPECT_NEAR(wrong.max_residual, 0.01 * exact.max_abs_derivative, 1e-14);
}

}  // namespace
}  // namespace bulab::nse
