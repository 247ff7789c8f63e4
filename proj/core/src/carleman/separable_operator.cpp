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

#include <stdexcept>
#include <utility>
#include <vector>

#include "bulab/carleman/conjugated_operator.hpp"

namespace bulab::carleman {
namespace {

void require_same_lattice(const SeparableField& u, const CarlemanParams& p) {
  if (!(u.grid() == p.grid) || !(u.time_grid() == p.time_grid)) {
    throw std::invalid_argument("field lattice does not match operator parameters");
  }
}

std::vector<double> times_t(const std::vector<double>& c, const TimeGrid& tg, int power) {
  std::vector<double> out(c.size());
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double t = tg.time(static_cast<int>(m));
    out[m] = c[m] * (power == 2 ? t * t : t);
  }
  return out;
}

}  // namespace

// Each operator is a sum of (time factor) x (space factor) pieces, so it acts
// term by term on sum_i c_i(t) B_i(x) without materializing frames.

SeparableField ConjugatedOperators::apply_L(const SeparableField& u) const {
  require_same_lattice(u, params_);
  const TimeGrid& tg = params_.time_grid;
  SeparableField out(u.grid(), u.time_grid());
  for (const SeparableTerm& term : u.terms()) {
    std::vector<double> c = time_derivative(term.profile, tg.dt());
    for (std::size_t m = 0; m < c.size(); ++m) {
      c[m] += l_time_coefficient(tg.time(static_cast<int>(m))) * term.profile[m];
    }
    out.add_term(std::move(c), term.spatial);
    out.add_term(term.profile, l_spatial(term.spatial));
  }
  return out;
}

SeparableField ConjugatedOperators::apply_A(const SeparableField& v) const {
  const SeparableField lv = apply_L(v);
  SeparableField out(v.grid(), v.time_grid());
  for (const SeparableTerm& term : lv.terms()) {
    out.add_term(times_t(term.profile, params_.time_grid, 1), term.spatial);
  }
  return out;
}

SeparableField ConjugatedOperators::apply_J(const SeparableField& v) const {
  require_same_lattice(v, params_);
  const TimeGrid& tg = params_.time_grid;
  SeparableField out(v.grid(), v.time_grid());
  for (const SeparableTerm& term : v.terms()) {
    out.add_term(times_t(term.profile, tg, 1), j_spatial(term.spatial));
    std::vector<double> g(term.profile.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
      g[m] = j_time_coefficient(tg.time(static_cast<int>(m))) * term.profile[m];
    }
    out.add_term(std::move(g), term.spatial);
  }
  return out;
}

SeparableField ConjugatedOperators::apply_K(const SeparableField& v) const {
  require_same_lattice(v, params_);
  const TimeGrid& tg = params_.time_grid;
  SeparableField out(v.grid(), v.time_grid());
  for (const SeparableTerm& term : v.terms()) {
    std::vector<double> c = times_t(time_derivative(term.profile, tg.dt()), tg, 1);
    for (std::size_t m = 0; m < c.size(); ++m) c[m] += 0.5 * term.profile[m];
    out.add_term(std::move(c), term.spatial);
    out.add_term(times_t(term.profile, tg, 1), k_spatial(term.spatial));
  }
  return out;
}

SeparableField ConjugatedOperators::apply_bracket_direct(const SeparableField& v) const {
  SeparableField out = apply_J(apply_K(v));
  out -= apply_K(apply_J(v));
  return out;
}

SeparableField ConjugatedOperators::apply_bracket_explicit(const SeparableField& v) const {
  require_same_lattice(v, params_);
  const TimeGrid& tg = params_.time_grid;
  SeparableField out(v.grid(), v.time_grid());
  for (const SeparableTerm& term : v.terms()) {
    out.add_term(times_t(term.profile, tg, 1), bracket_t_part(term.spatial));
    out.add_term(times_t(term.profile, tg, 2), bracket_t2_part(term.spatial));
  }
  return out;
}

}  // namespace bulab::carleman
