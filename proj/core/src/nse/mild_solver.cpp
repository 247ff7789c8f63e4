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

#include "bulab/nse/mild_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bulab/nse/symmetry.hpp"

namespace bulab::nse {

using spectral::Complex;
using spectral::Spectrum;
using spectral::Wavevector;

std::string_view to_string(Scheme s) noexcept {
  return s == Scheme::kIntegratingFactorRk2 ? "if_rk2" : "if_rk4";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "if_rk2") return Scheme::kIntegratingFactorRk2;
  if (text == "if_rk4") return Scheme::kIntegratingFactorRk4;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (expected if_rk2 or if_rk4)");
}

void MildSolverConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(total_time >= 0.0)) throw std::invalid_argument("total_time must be non-negative");
  if (store_every < 0) throw std::invalid_argument("store_every must be non-negative");
}

MildSolver::MildSolver(const Grid& grid, MildSolverConfig config) : grid_(grid), config_(std::move(config)) {
  config_.validate();
  const std::size_t n = spectral::spectrum_size(grid_);
  lap_.resize(n);
  q_.resize(n);
  multiplicity_.resize(n);
  spectral::ModeTable(grid_).for_each([&](std::size_t idx, const Wavevector& w) {
    lap_[idx] = -w.full_norm2;
    q_[idx] = w.odd;
    multiplicity_[idx] = w.multiplicity;
  });
  if (config_.dealias) {
    keep_ = spectral::DealiasMask::two_thirds(grid_).keep;
  } else {
    keep_.assign(n, 1);
  }
  if (config_.forcing) {
    const TensorField& f = *config_.forcing;
    if (!(f.grid() == grid_)) throw std::invalid_argument("forcing lives on a different grid");
    const int dim = grid_.dim();
    State div(dim, Spectrum(grid_));
    for (int j = 0; j < dim; ++j) {
      for (int l = 0; l < dim; ++l) {
        const Spectrum fjl = spectral::forward(f(j, l));
        for (std::size_t k = 0; k < n; ++k) div[j][k] += Complex(0.0, q_[k][l]) * fjl[k];
      }
    }
    project_and_truncate(div);
    forcing_ = std::move(div);
  }
}

void MildSolver::project_and_truncate(State& s) const {
  const int dim = grid_.dim();
  const std::size_t n = lap_.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep_[k]) {
      for (int i = 0; i < dim; ++i) s[i][k] = 0.0;
      continue;
    }
    const auto& q = q_[k];
    double q2 = 0.0;
    for (int i = 0; i < dim; ++i) q2 += q[i] * q[i];
    if (q2 == 0.0) continue;
    Complex dot = 0.0;
    for (int i = 0; i < dim; ++i) dot += q[i] * s[i][k];
    dot /= q2;
    for (int i = 0; i < dim; ++i) s[i][k] -= q[i] * dot;
  }
}

MildSolver::State MildSolver::to_state(const VectorField& u) const {
  if (!(u.grid() == grid_)) throw std::invalid_argument("field lives on a different grid");
  State s;
  for (const ScalarField& c : u.components()) s.push_back(spectral::forward(c));
  project_and_truncate(s);
  return s;
}

VectorField MildSolver::to_field(const State& s) const {
  std::vector<ScalarField> comps;
  for (const Spectrum& c : s) comps.push_back(spectral::inverse(c));
  return VectorField(std::move(comps));
}

MildSolver::State MildSolver::nonlinearity(const State& s) const {
  const int dim = grid_.dim();
  const std::size_t n = lap_.size();
  const VectorField u = to_field(s);
  State out(dim, Spectrum(grid_));
  for (int j = 0; j < dim; ++j) {
    for (int l = j; l < dim; ++l) {
      ScalarField prod = u[j];
      prod.multiply(u[l]);
      const Spectrum p = spectral::forward(prod);
      // -(div(u (x) u))_j = -sum_l d_l (u_j u_l); the product is symmetric.
      for (std::size_t k = 0; k < n; ++k) {
        out[j][k] -= Complex(0.0, q_[k][l]) * p[k];
        if (l != j) out[l][k] -= Complex(0.0, q_[k][j]) * p[k];
      }
    }
  }
  if (forcing_) {
    for (int i = 0; i < dim; ++i) out[i] += (*forcing_)[i];
  }
  project_and_truncate(out);
  return out;
}

MildSolver::State MildSolver::heat(const State& s, double tau) const {
  if (tau < 0.0) throw DomainError("backward heat flow is not available");
  State out = s;
  const std::size_t n = lap_.size();
  std::vector<double> factor(n);
  for (std::size_t k = 0; k < n; ++k) factor[k] = std::exp(lap_[k] * tau);
  for (Spectrum& c : out) {
    for (std::size_t k = 0; k < n; ++k) c[k] *= factor[k];
  }
  return out;
}

namespace {

void axpy(MildSolver::State& y, double a, const MildSolver::State& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i].add_scaled(a, x[i]);
}

}  // namespace

MildSolver::State MildSolver::step(const State& s, double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
  const VectorField u = to_field(s);
  const double speed = u.max_magnitude();
  if (speed > 0.0 && dt > grid_.spacing() / (2.0 * speed)) {
    throw DomainError("CFL violation: dt = " + std::to_string(dt) + " exceeds dx/(2 max|u|) = " +
                      std::to_string(grid_.spacing() / (2.0 * speed)));
  }
  const State k1 = nonlinearity(s);
  if (config_.scheme == Scheme::kIntegratingFactorRk2) {
    State predictor = s;
    axpy(predictor, dt, k1);
    const State k2 = nonlinearity(heat(predictor, dt));
    State out = heat(s, dt);
    axpy(out, 0.5 * dt, heat(k1, dt));
    axpy(out, 0.5 * dt, k2);
    project_and_truncate(out);
    return out;
  }
  const double h2 = 0.5 * dt;
  const State e_half_s = heat(s, h2);
  State stage = s;
  axpy(stage, h2, k1);
  const State k2 = nonlinearity(heat(stage, h2));
  stage = e_half_s;
  axpy(stage, h2, k2);
  const State k3 = nonlinearity(stage);
  stage = heat(s, dt);
  axpy(stage, dt, heat(k3, h2));
  const State k4 = nonlinearity(stage);

  State out = heat(s, dt);
  axpy(out, dt / 6.0, heat(k1, dt));
  State mid = k2;
  axpy(mid, 1.0, k3);
  axpy(out, dt / 3.0, heat(mid, h2));
  axpy(out, dt / 6.0, k4);
  project_and_truncate(out);
  return out;
}

double MildSolver::norm(const State& s) const {
  double sum = 0.0;
  for (const Spectrum& c : s) {
    for (std::size_t k = 0; k < c.size(); ++k) sum += multiplicity_[k] * std::norm(c[k]);
  }
  return std::sqrt(sum * grid_.cell_volume());
}

Diagnostics MildSolver::diagnose(const State& s, int step, double t) const {
  const int dim = grid_.dim();
  const std::size_t n = lap_.size();
  const double dv = grid_.cell_volume();
  Diagnostics d;
  d.step = step;
  d.t = t;
  double energy = 0.0;
  double enstrophy = 0.0;
  double div2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex div = 0.0;
    double mag2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      mag2 += std::norm(s[i][k]);
      div += Complex(0.0, q_[k][i]) * s[i][k];
    }
    energy += multiplicity_[k] * mag2;
    enstrophy += multiplicity_[k] * (-lap_[k]) * mag2;
    div2 += multiplicity_[k] * std::norm(div);
  }
  d.energy = 0.5 * energy * dv;
  d.enstrophy = 0.5 * enstrophy * dv;
  d.div_norm = std::sqrt(div2 * dv);

  const VectorField u = to_field(s);
  const double shell = 0.375 * grid_.box_length();
  double outer = 0.0;
  double total = 0.0;
  for (std::size_t idx = 0; idx < grid_.size(); ++idx) {
    double m2 = 0.0;
    for (int i = 0; i < dim; ++i) m2 += u[i][idx] * u[i][idx];
    total += m2;
    const Point x = grid_.point(idx);
    bool in_shell = false;
    for (int i = 0; i < dim; ++i) in_shell = in_shell || std::abs(x[i]) > shell;
    if (in_shell) outer += m2;
  }
  d.boundary_energy_fraction = total > 0.0 ? outer / total : 0.0;
  if (dim == 3 && config_.diagnostics.swirl) d.swirl_fraction = swirl_fraction(u);
  if (dim == 3 && config_.diagnostics.symmetry) {
    d.symmetry_defect = symmetry_defect(u, config_.diagnostics.symmetry_angles);
  }
  return d;
}

VectorField step_mild(const VectorField& u, double dt, const MildSolverConfig& config) {
  const MildSolver solver(u.grid(), config);
  return solver.to_field(solver.step(solver.to_state(u), dt));
}

namespace {

bool all_finite(const MildSolver::State& s) {
  for (const Spectrum& c : s) {
    for (const Complex& z : c.data()) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

}  // namespace

Trajectory solve(const VectorField& u0, const MildSolverConfig& config) {
  const MildSolver solver(u0.grid(), config);
  MildSolver::State s = solver.to_state(u0);
  const int steps = static_cast<int>(std::llround(config.total_time / config.dt));
  Trajectory traj{{}, {}, {}, solver.to_field(s), 0.0, false, {}};
  traj.diagnostics.push_back(solver.diagnose(s, 0, 0.0));
  if (config.store_every > 0) {
    traj.times.push_back(0.0);
    traj.states.push_back(traj.final_state);
  }
  for (int m = 1; m <= steps; ++m) {
    MildSolver::State next = solver.step(s, config.dt);
    if (!all_finite(next)) {
      traj.aborted = true;
      traj.abort_reason = "non-finite state at step " + std::to_string(m);
      break;
    }
    s = std::move(next);
    const double t = m * config.dt;
    traj.diagnostics.push_back(solver.diagnose(s, m, t));
    traj.final_time = t;
    if (config.store_every > 0 && m % config.store_every == 0) {
      traj.times.push_back(t);
      traj.states.push_back(solver.to_field(s));
    }
  }
  traj.final_state = solver.to_field(s);
  return traj;
}

PicardResult picard_iterate(const VectorField& u0, double horizon, int iterations, int nodes,
                            const MildSolverConfig& config) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (iterations < 1 || nodes < 1) throw std::invalid_argument("iterations and nodes must be positive");
  const MildSolver solver(u0.grid(), config);
  const MildSolver::State s0 = solver.to_state(u0);
  const double delta = horizon / nodes;

  std::vector<MildSolver::State> linear;
  for (int j = 0; j <= nodes; ++j) linear.push_back(solver.heat(s0, j * delta));
  std::vector<MildSolver::State> current = linear;

  const double scale = solver.norm(s0);
  PicardResult result{VectorField(u0.grid()), {}};
  for (int it = 0; it < iterations; ++it) {
    std::vector<MildSolver::State> next = linear;
    MildSolver::State prev_n = solver.nonlinearity(current[0]);
    MildSolver::State integral(prev_n.size(), spectral::Spectrum(u0.grid()));
    for (int j = 1; j <= nodes; ++j) {
      const MildSolver::State nj = solver.nonlinearity(current[j]);
      integral = solver.heat(integral, delta);
      axpy(integral, 0.5 * delta, solver.heat(prev_n, delta));
      axpy(integral, 0.5 * delta, nj);
      axpy(next[j], 1.0, integral);
      prev_n = nj;
    }
    double dist = 0.0;
    for (int j = 0; j <= nodes; ++j) {
      MildSolver::State diff = next[j];
      axpy(diff, -1.0, current[j]);
      dist = std::max(dist, solver.norm(diff));
    }
    result.distances.push_back(dist);
    const std::size_t c = result.distances.size();
    if (c >= 2 && dist > result.distances[c - 2] && dist > 1e-10 * std::max(scale, 1.0)) {
      throw DomainError("Picard iterates are not contracting; use a smaller horizon");
    }
    current = std::move(next);
  }
  result.state = solver.to_field(current.back());
  return result;
}

}  // namespace bulab::nse
