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

#include "bulab/inequality/families.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "bulab/spectral/operators.hpp"

namespace bulab::inequality {

double plateau(double t, double t0, double t1, double ramp) noexcept {
  return smooth_step((t - t0) / ramp) * smooth_step((t1 - t) / ramp);
}

ScalarField radial_cutoff(const Grid& grid, double m) {
  return ScalarField::sample(grid, [m](const Point& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / m;
    return 1.0 - smooth_step(r - 1.0);
  });
}

ScalarField plateau_field(const Grid& grid, double radius, double width) {
  return ScalarField::sample(grid, [radius, width](const Point& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    return 1.0 - smooth_step((r - radius) / width);
  });
}

std::vector<FamilyMember> standard_family(const Grid& grid, const TimeGrid& tg, std::uint64_t seed,
                                          const FamilyOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<FamilyMember> out;
  for (int i = 0; i < options.superpositions; ++i) {
    SpaceTimeField u(grid, tg);
    for (int b = 0; b < options.bumps_per_superposition; ++b) {
      u += make_spacetime_bump(random_bump(rng, grid, tg, options.sampling), grid, tg);
    }
    out.push_back({"mix-" + std::to_string(i), std::move(u)});
  }
  for (int i = 0; i < options.separable; ++i) {
    const BumpSpec spatial = random_spatial_bump(rng, grid, options.sampling);
    const BumpSpec temporal = random_bump(rng, grid, tg, options.sampling);
    BumpSpec spec = spatial;
    spec.time = temporal.time;
    out.push_back({"sep-" + std::to_string(i), make_spacetime_bump(spec, grid, tg)});
  }
  const double span = tg.t_plus() - tg.t_minus();
  for (int i = 0; i < options.near_caloric; ++i) {
    const ScalarField b = make_bump(random_spatial_bump(rng, grid, options.sampling), grid);
    const double t0 = tg.t_minus() + tg.dt();
    const double t1 = tg.t_plus() - tg.dt();
    SpaceTimeField u(grid, tg);
    for (int m = 0; m < tg.frames(); ++m) {
      const double t = tg.time(m);
      const double chi = plateau(t, t0, t1, 0.25 * span);
      if (chi == 0.0) continue;
      u.frame(m) = spectral::heat_semigroup(b, tg.t_plus() - t);
      u.frame(m) *= chi;
    }
    out.push_back({"cal-" + std::to_string(i), std::move(u)});
  }
  return out;
}

std::vector<TensorBumpSpec> tensor_bump_specs(const Grid& grid, int count, std::uint64_t seed,
                                              const BumpSampling& sampling) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int dim = grid.dim();
  constexpr int kBumpsPerTensor = 2;
  std::vector<TensorBumpSpec> out;
  for (int c = 0; c < count; ++c) {
    TensorBumpSpec spec;
    for (int p = 0; p < kBumpsPerTensor; ++p) {
      spec.bumps.push_back(random_spatial_bump(rng, grid, sampling));
      std::vector<double> s(dim * dim);
      for (int j = 0; j < dim; ++j) {
        for (int l = j; l < dim; ++l) {
          s[j * dim + l] = normal(rng);
          s[l * dim + j] = s[j * dim + l];
        }
      }
      spec.coefficients.push_back(std::move(s));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

TensorField make_tensor(const TensorBumpSpec& spec, const Grid& grid) {
  const int dim = grid.dim();
  TensorField f(grid);
  for (std::size_t p = 0; p < spec.bumps.size(); ++p) {
    if (static_cast<int>(spec.coefficients[p].size()) != dim * dim) {
      throw std::invalid_argument("tensor coefficients do not match the grid dimension");
    }
    spec.bumps[p].check_inside(grid);
    const ScalarField b = make_bump(spec.bumps[p], grid);
    for (int j = 0; j < dim; ++j) {
      for (int l = 0; l < dim; ++l) f(j, l).add_scaled(spec.coefficients[p][j * dim + l], b);
    }
  }
  return f;
}

std::vector<TensorField> tensor_bump_family(const Grid& grid, int count, std::uint64_t seed,
                                            const BumpSampling& sampling) {
  std::vector<TensorField> out;
  for (const TensorBumpSpec& spec : tensor_bump_specs(grid, count, seed, sampling)) {
    out.push_back(make_tensor(spec, grid));
  }
  return out;
}

}  // namespace bulab::inequality
