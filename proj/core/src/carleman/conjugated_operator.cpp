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

#include "bulab/carleman/conjugated_operator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "bulab/spectral/operators.hpp"
#include "bulab/spectral/transform.hpp"

namespace bulab::carleman {

using spectral::Complex;
using spectral::Wavevector;

void CarlemanParams::validate() const {
  weight.validate();
  if (time_grid.t_minus() <= 0.0) throw DomainError("time lattice must start after t = 0");
}

double potential_v1(double r2, double k, int n) noexcept {
  const double q = 1.0 + r2;
  return 64.0 * k * r2 / (q * q * q) - (16.0 * k * n + 32.0 * k) / (q * q);
}

double potential_v2(double r2, double k, int n) noexcept {
  const double q = 1.0 + r2;
  const double q2 = q * q;
  const double k3 = k * k * k;
  return -(4.0 * n + 8.0) * k * n / q2 + (32.0 * k * n + 64.0 * k - 32.0 * k3) * r2 / (q2 * q) +
         (64.0 * k3 - 96.0 * k) * r2 * r2 / (q2 * q2);
}

namespace {

double radius2(const Point& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; }

void require_same_lattice(const SpaceTimeField& u, const CarlemanParams& p) {
  if (!(u.grid() == p.grid) || !(u.time_grid() == p.time_grid)) {
    throw std::invalid_argument("field lattice does not match operator parameters");
  }
}

}  // namespace

PotentialProfile PotentialProfile::sample(const Grid& grid, double k) {
  const int n = grid.dim();
  return {ScalarField::sample(grid, [&](const Point& x) { return potential_v1(radius2(x), k, n); }),
          ScalarField::sample(grid, [&](const Point& x) { return potential_v2(radius2(x), k, n); })};
}

std::vector<double> time_derivative(const std::vector<double>& c, double dt) {
  const std::size_t m = c.size();
  std::vector<double> out(m, 0.0);
  const double s = 0.5 / dt;
  for (std::size_t i = 0; i < m; ++i) {
    const double next = i + 1 < m ? c[i + 1] : 0.0;
    const double prev = i > 0 ? c[i - 1] : 0.0;
    out[i] = s * (next - prev);
  }
  return out;
}

SpaceTimeField time_derivative(const SpaceTimeField& u) {
  SpaceTimeField out(u.grid(), u.time_grid());
  const int frames = u.frame_count();
  const double s = 0.5 / u.time_grid().dt();
  for (int m = 0; m < frames; ++m) {
    ScalarField& f = out.frame(m);
    if (m + 1 < frames) f.add_scaled(s, u.frame(m + 1));
    if (m > 0) f.add_scaled(-s, u.frame(m - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ConjugatedOperators::FrameDerivatives {
  ScalarField lap;
  ScalarField x_dot_grad;  // sum_i x_i d_i f
  ScalarField hessian;     // sum_ij x_i x_j d_i d_j f, empty grid-sized zero if unused
};

ConjugatedOperators::ConjugatedOperators(const CarlemanParams& params)
    : params_(params),
      inv_q_(params.grid),
      w_j_(params.grid),
      p_k_(params.grid),
      l_potential_(params.grid),
      lap_coeff_(params.grid),
      hess_coeff_(params.grid),
      potentials_(PotentialProfile::sample(params.grid, params.weight.k)) {
  params_.validate();
  const Grid& g = params_.grid;
  const double k = params_.weight.k;
  const double n = g.dim();
  for (int i = 0; i < g.dim(); ++i) {
    x_.push_back(ScalarField::sample(g, [i](const Point& x) { return x[i]; }));
  }
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const double r2 = radius2(g.point(idx));
    const double q = 1.0 + r2;
    inv_q_[idx] = 1.0 / q;
    w_j_[idx] = 4.0 * k * k * r2 / (q * q);
    p_k_[idx] = 2.0 * k * (n / q - 2.0 * r2 / (q * q));
    l_potential_[idx] = 2.0 * k * n / q + 4.0 * k * (k - 1.0) * r2 / (q * q);
    lap_coeff_[idx] = 8.0 * k / q;
    hess_coeff_[idx] = 16.0 * k / (q * q);
  }
}

ConjugatedOperators::FrameDerivatives ConjugatedOperators::derivatives(const ScalarField& f,
                                                                       bool need_hessian) const {
  const Grid& g = f.grid();
  const int dim = g.dim();
  const spectral::Spectrum s = spectral::forward(f);
  FrameDerivatives d{spectral::inverse_with(s, [](const Wavevector& w) { return Complex(-w.full_norm2, 0.0); }),
                     ScalarField(g), ScalarField(g)};
  for (int i = 0; i < dim; ++i) {
    ScalarField di = spectral::inverse_with(s, [i](const Wavevector& w) { return Complex(0.0, w.odd[i]); });
    di.multiply(x_[i]);
    d.x_dot_grad += di;
  }
  if (need_hessian) {
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) {
        ScalarField dij = spectral::inverse_with(s, [i, j](const Wavevector& w) {
          return Complex(i == j ? -w.full[i] * w.full[i] : -w.odd[i] * w.odd[j], 0.0);
        });
        dij.multiply(x_[i]);
        dij.multiply(x_[j]);
        d.hessian.add_scaled(i == j ? 1.0 : 2.0, dij);
      }
    }
  }
  return d;
}

ScalarField ConjugatedOperators::drift(const ScalarField& f) const {
  ScalarField out = derivatives(f, false).x_dot_grad;
  out.multiply(inv_q_);
  out *= 4.0 * params_.weight.k;
  return out;
}

ScalarField ConjugatedOperators::hessian_contraction(const ScalarField& f) const {
  return derivatives(f, true).hessian;
}

ScalarField ConjugatedOperators::j_spatial(const ScalarField& f) const {
  ScalarField out = spectral::laplacian(f);
  ScalarField w = f;
  w.multiply(w_j_);
  out += w;
  return out;
}

ScalarField ConjugatedOperators::k_spatial(const ScalarField& f) const {
  ScalarField out = drift(f);
  ScalarField p = f;
  p.multiply(p_k_);
  out += p;
  return out;
}

ScalarField ConjugatedOperators::l_spatial(const ScalarField& f) const {
  const FrameDerivatives d = derivatives(f, false);
  ScalarField out = d.lap;
  ScalarField drift_part = d.x_dot_grad;
  drift_part.multiply(inv_q_);
  out.add_scaled(4.0 * params_.weight.k, drift_part);
  ScalarField pot = f;
  pot.multiply(l_potential_);
  out += pot;
  return out;
}

ScalarField ConjugatedOperators::bracket_t_part(const ScalarField& f) const {
  ScalarField out = f;
  out *= params_.weight.a + 1.0;
  out -= spectral::laplacian(f);
  ScalarField w = f;
  w.multiply(w_j_);
  out -= w;
  return out;
}

ScalarField ConjugatedOperators::bracket_t2_part(const ScalarField& f) const {
  const FrameDerivatives d = derivatives(f, true);
  ScalarField out = d.lap;
  out.multiply(lap_coeff_);
  ScalarField h = d.hessian;
  h.multiply(hess_coeff_);
  out -= h;
  ScalarField v1 = d.x_dot_grad;
  v1.multiply(potentials_.v1);
  out += v1;
  ScalarField v2 = f;
  v2.multiply(potentials_.v2);
  out += v2;
  return out;
}

double ConjugatedOperators::j_time_coefficient(double t) const noexcept {
  return (params_.weight.a + 1.0) * (1.0 - t) - 0.5;
}

double ConjugatedOperators::l_time_coefficient(double t) const noexcept {
  return (params_.weight.a + 1.0) * (1.0 - t) / t;
}

// ---------------------------------------------------------------------------
// Frame-by-frame operators.

SpaceTimeField ConjugatedOperators::apply_L(const SpaceTimeField& u) const {
  require_same_lattice(u, params_);
  SpaceTimeField out = time_derivative(u);
  const TimeGrid& tg = params_.time_grid;
  for (int m = 0; m < u.frame_count(); ++m) {
    ScalarField& f = out.frame(m);
    f += l_spatial(u.frame(m));
    f.add_scaled(l_time_coefficient(tg.time(m)), u.frame(m));
  }
  return out;
}

SpaceTimeField ConjugatedOperators::apply_A(const SpaceTimeField& v) const {
  SpaceTimeField out = apply_L(v);
  for (int m = 0; m < out.frame_count(); ++m) out.frame(m) *= params_.time_grid.time(m);
  return out;
}

SpaceTimeField ConjugatedOperators::apply_J(const SpaceTimeField& v) const {
  require_same_lattice(v, params_);
  SpaceTimeField out(v.grid(), v.time_grid());
  const TimeGrid& tg = params_.time_grid;
  for (int m = 0; m < v.frame_count(); ++m) {
    const double t = tg.time(m);
    ScalarField& f = out.frame(m);
    f = j_spatial(v.frame(m));
    f *= t;
    f.add_scaled(j_time_coefficient(t), v.frame(m));
  }
  return out;
}

SpaceTimeField ConjugatedOperators::apply_K(const SpaceTimeField& v) const {
  require_same_lattice(v, params_);
  SpaceTimeField out = time_derivative(v);
  const TimeGrid& tg = params_.time_grid;
  for (int m = 0; m < v.frame_count(); ++m) {
    const double t = tg.time(m);
    ScalarField& f = out.frame(m);
    f *= t;
    f.add_scaled(t, k_spatial(v.frame(m)));
    f.add_scaled(0.5, v.frame(m));
  }
  return out;
}

SpaceTimeField ConjugatedOperators::apply_bracket_direct(const SpaceTimeField& v) const {
  SpaceTimeField out = apply_J(apply_K(v));
  out -= apply_K(apply_J(v));
  return out;
}

SpaceTimeField ConjugatedOperators::apply_bracket_explicit(const SpaceTimeField& v) const {
  require_same_lattice(v, params_);
  SpaceTimeField out(v.grid(), v.time_grid());
  const TimeGrid& tg = params_.time_grid;
  for (int m = 0; m < v.frame_count(); ++m) {
    const double t = tg.time(m);
    ScalarField& f = out.frame(m);
    f = bracket_t_part(v.frame(m));
    f *= t;
    f.add_scaled(t * t, bracket_t2_part(v.frame(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// v-transform.

LogScaledField v_transform(const SpaceTimeField& u, const CarlemanParams& params) {
  require_same_lattice(u, params);
  params.validate();
  const TimeGrid& tg = params.time_grid;
  const double a1 = params.weight.a + 1.0;
  std::vector<double> log_factor(tg.frames());
  double max_log = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < tg.frames(); ++m) {
    log_factor[m] = -a1 * log_temporal_weight(tg.time(m));
    max_log = std::max(max_log, log_factor[m]);
  }
  // Headroom for the squared norms taken downstream.
  constexpr double kSafeLog = 300.0;
  LogScaledField out{SpaceTimeField(u.grid(), u.time_grid()), 0.0, false};
  if (params.weight.a >= kLogDomainThreshold || max_log > kSafeLog) {
    out.rescaled = true;
    out.log_scale = max_log;
  }
  const ScalarField w = sample_spatial_weight(params.grid, params.weight.k);
  for (int m = 0; m < tg.frames(); ++m) {
    ScalarField& f = out.values.frame(m);
    f = u.frame(m);
    f.multiply(w);
    f *= std::exp(log_factor[m] - out.log_scale);
  }
  return out;
}

SpaceTimeField inverse_v_transform(const LogScaledField& v, const CarlemanParams& params) {
  require_same_lattice(v.values, params);
  const TimeGrid& tg = params.time_grid;
  const double a1 = params.weight.a + 1.0;
  const ScalarField w = sample_spatial_weight(params.grid, -params.weight.k);
  SpaceTimeField out(v.values.grid(), v.values.time_grid());
  for (int m = 0; m < tg.frames(); ++m) {
    ScalarField& f = out.frame(m);
    f = v.values.frame(m);
    f.multiply(w);
    const double log_factor = v.log_scale + a1 * log_temporal_weight(tg.time(m));
    // Frames that underflowed in v stay zero instead of turning into 0 * inf.
    for (double& x : f.data()) x = x == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(x)) + log_factor), x);
  }
  return out;
}

namespace {

// log of sum_i w_i f_i^2 dx^dim dt for one frame, w_i >= 0. Scaled by max|f|
// so tiny frames do not underflow when squared.
LogScalar log_frame_energy(const ScalarField& f, const ScalarField* w, double dt) {
  const double peak = f.max_abs();
  if (peak == 0.0) return LogScalar::from_value(0.0);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double g = f[i] / peak;
    s += (w ? (*w)[i] : 1.0) * g * g;
  }
  LogScalar out = LogScalar::from_value(s * f.grid().cell_volume() * dt);
  if (!out.is_zero()) out.log_abs += 2.0 * std::log(peak);
  return out;
}

}  // namespace

ConjugationEquivalence conjugation_equivalence(const SpaceTimeField& u, const CarlemanParams& params) {
  const LogScaledField v = v_transform(u, params);
  const ConjugatedOperators ops(params);
  const SpaceTimeField av = ops.apply_A(v.values);

  SpaceTimeField heat = time_derivative(u);
  for (int m = 0; m < u.frame_count(); ++m) heat.frame(m) += spectral::laplacian(u.frame(m));

  const TimeGrid& tg = params.time_grid;
  const double dt = tg.dt();
  const ScalarField w2 = sample_spatial_weight(params.grid, 2.0 * params.weight.k);
  LogAccumulator lhs;
  LogAccumulator rhs;
  for (int m = 0; m < tg.frames(); ++m) {
    LogScalar l = log_frame_energy(av.frame(m), nullptr, dt);
    if (!l.is_zero()) lhs.add_log(l.log_abs + 2.0 * v.log_scale, 1);
    LogScalar r = log_frame_energy(heat.frame(m), &w2, dt);
    if (!r.is_zero()) rhs.add_log(r.log_abs - 2.0 * params.weight.a * log_temporal_weight(tg.time(m)), 1);
  }
  ConjugationEquivalence out;
  out.norm_av_squared = lhs.result();
  out.weighted_rhs = rhs.result();
  out.ratio = out.weighted_rhs.is_zero() ? 0.0 : log_ratio(out.norm_av_squared, out.weighted_rhs);
  out.lower = std::exp(2.0 * tg.t_minus());
  out.upper = std::exp(2.0 * tg.t_plus());
  out.rescaled = v.rescaled;
  return out;
}

}  // namespace bulab::carleman
