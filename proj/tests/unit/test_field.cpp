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
#include <random>

#include "bulab/field/bumps.hpp"
#include "bulab/field/field_io.hpp"
#include "bulab/field/fields.hpp"
#include "bulab/field/grid.hpp"
#include "bulab/field/log_scalar.hpp"
#include "bulab/field/quadrature.hpp"
#include "bulab/field/separable.hpp"
#include "bulab/field/weights.hpp"

namespace bulab {
namespace {

TEST(Grid, ValidatesShape) {
  EXPECT_THROW(Grid::make(4, 16, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid::make(3, 15, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid::make(3, 6, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid::make(2, 16, 0.0), std::invalid_argument);
  const Grid g = Grid::make(3, 16, 8.0);
  EXPECT_EQ(g.size(), 4096u);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
  EXPECT_DOUBLE_EQ(g.cell_volume(), 0.125);
  EXPECT_DOUBLE_EQ(g.coordinate(0), -4.0);
}

TEST(Grid, RavelRoundTrip) {
  const Grid g = Grid::make(3, 8, 2.0);
  for (std::size_t i = 0; i < g.size(); i += 37) EXPECT_EQ(g.ravel(g.unravel(i)), i);
  const LatticeIndex idx = g.unravel(1 * 64 + 2 * 8 + 3);
  EXPECT_EQ(idx[0], 1);
  EXPECT_EQ(idx[1], 2);
  EXPECT_EQ(idx[2], 3);
  const Point p = g.point(g.ravel({1, 2, 3}));
  EXPECT_DOUBLE_EQ(p[0], -1.0 + 0.25);
  EXPECT_DOUBLE_EQ(p[2], -1.0 + 0.75);
}

TEST(TimeGrid, ValidatesWindow) {
  EXPECT_THROW(TimeGrid::make(0.0, 0.1, 8), std::invalid_argument);
  EXPECT_THROW(TimeGrid::make(0.1, 0.05, 8), std::invalid_argument);
  EXPECT_THROW(TimeGrid::make(0.1, 0.6, 8), std::invalid_argument);
  EXPECT_THROW(TimeGrid::make(0.02, 0.1, 1), std::invalid_argument);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 8);
  EXPECT_EQ(tg.frames(), 9);
  EXPECT_DOUBLE_EQ(tg.dt(), 0.01);
  EXPECT_DOUBLE_EQ(tg.time(8), 0.1);
  EXPECT_DOUBLE_EQ(tg.trapezoid_weight(0), 0.005);
  EXPECT_EQ(tg.refined().steps(), 16);
}

TEST(Weights, ClosedForms) {
  EXPECT_DOUBLE_EQ(temporal_weight(1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(temporal_weight_derivative(1.0), 0.0);
  EXPECT_NEAR(log_temporal_weight(0.5), std::log(0.5) - 0.5, 1e-15);
  EXPECT_THROW(temporal_weight(0.0), DomainError);
  EXPECT_DOUBLE_EQ(spatial_weight({1.0, 1.0, 0.0}, 2.0), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(spatial_weight_r2(3.0, 0.5), 0.5);
  EXPECT_THROW((WeightParams{-1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_DOUBLE_EQ((WeightParams{1.0, 1.5, ExponentConvention::kDouble}.spatial_exponent()), 3.0);
  EXPECT_EQ(parse_convention("double_k"), ExponentConvention::kDouble);
  EXPECT_THROW(parse_convention("triple"), std::invalid_argument);
}

TEST(LogScalar, SumsBeyondDoubleRange) {
  LogAccumulator acc;
  acc.add_log(800.0, 1);
  acc.add_log(800.0, 1);
  const LogScalar s = acc.result();
  EXPECT_EQ(s.sign, 1);
  EXPECT_NEAR(s.log_abs, 800.0 + std::log(2.0), 1e-12);
  EXPECT_TRUE(std::isinf(s.value()));

  LogAccumulator cancel;
  cancel.add(LogScalar::from_value(3.0));
  cancel.add(LogScalar::from_value(-1.0));
  EXPECT_NEAR(cancel.result().value(), 2.0, 1e-15);
  EXPECT_NEAR(log_ratio(LogScalar::from_log(1000.0), LogScalar::from_log(999.0)), std::exp(1.0), 1e-12);
}

TEST(Quadrature, GaussianIntegral) {
  const Grid g = Grid::make(3, 48, 12.0);
  const ScalarField f = ScalarField::sample(g, [](const Point& x) {
    return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  });
  const double exact = std::pow(std::numbers::pi, 1.5);
  EXPECT_NEAR(weighted_integral(f, [](const Point&) { return 1.0; }), exact, 1e-12 * exact);
  EXPECT_NEAR(l2_norm(f) * l2_norm(f), std::pow(std::numbers::pi / 2.0, 1.5), 1e-12);
}

TEST(Quadrature, RejectsNonFinite) {
  const Grid g = Grid::make(2, 8, 1.0);
  ScalarField f(g);
  f[3] = std::nan("");
  EXPECT_THROW(weighted_integral(f, [](const Point&) { return 1.0; }), DomainError);
}

TEST(Quadrature, TrapezoidInTime) {
  const Grid g = Grid::make(2, 8, 1.0);
  const TimeGrid tg = TimeGrid::make(0.1, 0.5, 4);
  SpaceTimeField u(g, tg);
  for (int m = 0; m < u.frame_count(); ++m) {
    for (double& v : u.frame(m).data()) v = tg.time(m);
  }
  // int_0.1^0.5 t dt, exact for the trapezoid rule.
  EXPECT_NEAR(weighted_integral(u, [](const Point&) { return 1.0; }, [](double) { return 1.0; }), 0.12, 1e-15);
}

TEST(Bumps, CompactSupportAndPeak) {
  const Grid g = Grid::make(2, 32, 8.0);
  BumpSpec spec;
  spec.radius = 1.5;
  spec.amplitude = 2.0;
  const ScalarField b = make_bump(spec, g);
  const std::size_t center = g.ravel({16, 16, 0});
  EXPECT_NEAR(b[center], 2.0 * std::exp(-1.0), 1e-15);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    if (x[0] * x[0] + x[1] * x[1] >= 1.5 * 1.5) {
      EXPECT_EQ(b[i], 0.0);
    }
  }
  spec.center = {3.5, 0.0, 0.0};
  EXPECT_THROW(spec.check_inside(g), DomainError);
}

TEST(Bumps, SpaceTimeEndsVanish) {
  const Grid g = Grid::make(2, 16, 8.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 16);
  std::mt19937_64 rng(4);
  const BumpSpec spec = random_bump(rng, g, tg);
  const SpaceTimeField u = make_spacetime_bump(spec, g, tg);
  EXPECT_TRUE(u.vanishes_at_time_ends());
  std::mt19937_64 rng2(4);
  const BumpSpec again = random_bump(rng2, g, tg);
  EXPECT_EQ(spec.radius, again.radius);
  EXPECT_EQ(spec.center, again.center);
}

TEST(Bumps, SmoothStep) {
  EXPECT_EQ(smooth_step(-1.0), 0.0);
  EXPECT_EQ(smooth_step(2.0), 1.0);
  EXPECT_NEAR(smooth_step(0.5), 0.5, 1e-15);
  const double h = 1e-6;
  EXPECT_NEAR(smooth_step_derivative(0.3), (smooth_step(0.3 + h) - smooth_step(0.3 - h)) / (2 * h), 1e-8);
}

TEST(Separable, MatchesFrames) {
  const Grid g = Grid::make(2, 16, 8.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 16);
  std::mt19937_64 rng(9);
  SeparableField s = SeparableField::from_bump(random_bump(rng, g, tg), g, tg);
  s.add_scaled(-0.5, SeparableField::from_bump(random_bump(rng, g, tg), g, tg));
  const SpaceTimeField dense = s.to_frames();
  for (int m = 0; m < tg.frames(); ++m) {
    const ScalarField f = s.frame(m);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(f[i], dense.frame(m)[i]);
  }
  EXPECT_NEAR(s.inner_product(s), inner_product(dense, dense), 1e-14 * inner_product(dense, dense));
  EXPECT_NEAR(s.norm(), l2_norm(dense), 1e-14 * l2_norm(dense));
}

TEST(FieldIo, RoundTrip) {
  const Grid g = Grid::make(3, 8, 2.0);
  VectorField u(g);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < g.size(); ++i) u[c][i] = std::sin(0.1 * i + c);
  }
  const auto bytes = encode_field(u);
  EXPECT_EQ(bytes.size(), kFieldHeaderBytes + 3 * g.size() * 8);
  const FieldHeader h = decode_header(bytes);
  EXPECT_EQ(h.dim, 3);
  EXPECT_EQ(h.points_per_axis, 8);
  EXPECT_EQ(h.box_length, 2.0);
  EXPECT_EQ(h.steps, 0);
  const VectorField back = decode_vector_field(bytes);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(back[c].data(), u[c].data());
  EXPECT_EQ(encode_field(back), bytes);
  EXPECT_EQ(content_hash({}), "cbf29ce484222325");
}

TEST(FieldIo, SpaceTimeRoundTrip) {
  const Grid g = Grid::make(2, 8, 2.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 4);
  SpaceTimeField u(g, tg);
  u.frame(2)[5] = 1.25;
  const SpaceTimeField back = decode_spacetime_field(encode_field(u));
  EXPECT_TRUE(back.time_grid() == tg);
  EXPECT_EQ(back.frame(2)[5], 1.25);
  std::vector<std::uint8_t> truncated = encode_field(u);
  truncated.resize(truncated.size() - 3);
  EXPECT_ANY_THROW(decode_spacetime_field(truncated));
}

}  // namespace
}  // namespace bulab
