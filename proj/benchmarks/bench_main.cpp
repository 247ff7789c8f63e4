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


#include <benchmark/benchmark.h>

#include <cmath>

#include "bulab/carleman/conjugated_operator.hpp"
#include "bulab/field/bumps.hpp"
#include "bulab/field/separable.hpp"
#include "bulab/nse/exact_flows.hpp"
#include "bulab/nse/mild_solver.hpp"
#include "bulab/spectral/operators.hpp"
#include "bulab/spectral/transform.hpp"

namespace {

using namespace bulab;

ScalarField smooth_field(const Grid& g) {
  return ScalarField::sample(g, [](const Point& x) { return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])); });
}

void BM_ForwardInverse(benchmark::State& state) {
  const Grid g = Grid::make(3, static_cast<int>(state.range(0)), 8.0);
  const ScalarField f = smooth_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::inverse(spectral::forward(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_ForwardInverse)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LerayProject(benchmark::State& state) {
  const Grid g = Grid::make(3, static_cast<int>(state.range(0)), 2.0 * M_PI);
  const VectorField u = nse::random_solenoidal_field(g, 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::leray_project(u));
}
BENCHMARK(BM_LerayProject)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CzDivergence(benchmark::State& state) {
  const Grid g = Grid::make(3, static_cast<int>(state.range(0)), 8.0);
  TensorField f(g);
  for (int j = 0; j < 3; ++j) f(j, j) = smooth_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::cz_divergence(f));
}
BENCHMARK(BM_CzDivergence)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_BracketSeparable(benchmark::State& state) {
  const Grid g = Grid::make(3, static_cast<int>(state.range(0)), 6.0);
  const TimeGrid tg = TimeGrid::make(0.02, 0.1, 32);
  BumpSpec spec;
  spec.radius = 2.3;
  spec.time = TemporalBump{0.06, 0.035, 1.0};
  const carleman::ConjugatedOperators ops({WeightParams{10.0, 2.0}, g, tg});
  const SeparableField v = SeparableField::from_bump(spec, g, tg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ops.apply_bracket_direct(v));
    benchmark::DoNotOptimize(ops.apply_bracket_explicit(v));
  }
}
BENCHMARK(BM_BracketSeparable)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_StepMild(benchmark::State& state) {
  const Grid g = Grid::make(3, static_cast<int>(state.range(0)), 2.0 * M_PI);
  nse::MildSolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.scheme = state.range(1) == 2 ? nse::Scheme::kIntegratingFactorRk2 : nse::Scheme::kIntegratingFactorRk4;
  const VectorField u = nse::random_solenoidal_field(g, 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nse::step_mild(u, cfg.dt, cfg));
}
BENCHMARK(BM_StepMild)->Args({32, 2})->Args({32, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
