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

#include "bulab/spectral/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bulab::spectral {
namespace {

constexpr Complex kI(0.0, 1.0);

void require_axis(const Grid& g, int axis) {
  if (axis < 0 || axis >= g.dim()) throw std::out_of_range("axis index outside grid dimension");
}

// Entry (i, j) of xi xi^T with the shared convention.
double xi_xi(const Wavevector& w, int i, int j) {
  return i == j ? w.full[i] * w.full[i] : w.odd[i] * w.odd[j];
}

std::vector<Spectrum> forward_all(const std::vector<ScalarField>& comps) {
  std::vector<Spectrum> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(forward(c));
  return out;
}

std::vector<ScalarField> inverse_all(const std::vector<Spectrum>& specs) {
  std::vector<ScalarField> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(inverse(s));
  return out;
}

}  // namespace

ScalarField laplacian(const ScalarField& f) {
  return inverse_with(forward(f), [](const Wavevector& w) { return Complex(-w.full_norm2, 0.0); });
}

ScalarField partial(const ScalarField& f, int axis) {
  require_axis(f.grid(), axis);
  return inverse_with(forward(f), [axis](const Wavevector& w) { return kI * w.odd[axis]; });
}

ScalarField second_partial(const ScalarField& f, int i, int j) {
  require_axis(f.grid(), i);
  require_axis(f.grid(), j);
  return inverse_with(forward(f), [i, j](const Wavevector& w) { return Complex(-xi_xi(w, i, j), 0.0); });
}

VectorField gradient(const ScalarField& f) {
  const Spectrum s = forward(f);
  std::vector<ScalarField> comps;
  for (int d = 0; d < f.grid().dim(); ++d)
    comps.push_back(inverse_with(s, [d](const Wavevector& w) { return kI * w.odd[d]; }));
  return VectorField(std::move(comps));
}

ScalarField divergence(const VectorField& u) {
  const Grid& g = u.grid();
  Spectrum acc(g);
  const ModeTable modes(g);
  for (int d = 0; d < u.dim(); ++d) {
    const Spectrum s = forward(u[d]);
    modes.for_each([&](std::size_t idx, const Wavevector& w) { acc[idx] += kI * w.odd[d] * s[idx]; });
  }
  return inverse(acc);
}

VectorField divergence(const TensorField& F) {
  const Grid& g = F.grid();
  const int dim = F.dim();
  const ModeTable modes(g);
  std::vector<ScalarField> comps;
  for (int j = 0; j < dim; ++j) {
    Spectrum acc(g);
    for (int l = 0; l < dim; ++l) {
      const Spectrum s = forward(F(j, l));
      modes.for_each([&](std::size_t idx, const Wavevector& w) { acc[idx] += kI * w.odd[l] * s[idx]; });
    }
    comps.push_back(inverse(acc));
  }
  return VectorField(std::move(comps));
}

VectorField curl(const VectorField& u) {
  if (u.dim() != 3) throw std::invalid_argument("curl is defined for dim = 3");
  const std::vector<Spectrum> s = forward_all(u.components());
  std::vector<Spectrum> out(3, Spectrum(u.grid()));
  ModeTable(u.grid()).for_each([&](std::size_t idx, const Wavevector& w) {
    const auto& q = w.odd;
    out[0][idx] = kI * (q[1] * s[2][idx] - q[2] * s[1][idx]);
    out[1][idx] = kI * (q[2] * s[0][idx] - q[0] * s[2][idx]);
    out[2][idx] = kI * (q[0] * s[1][idx] - q[1] * s[0][idx]);
  });
  return VectorField(inverse_all(out));
}

ScalarField inverse_neg_laplacian(const ScalarField& f) {
  return inverse_with(forward(f), [](const Wavevector& w) {
    return w.full_norm2 > 0.0 ? Complex(1.0 / w.full_norm2, 0.0) : Complex(0.0, 0.0);
  });
}

ScalarField heat_semigroup(const ScalarField& f, double t) {
  if (!(t >= 0.0)) throw DomainError("heat semigroup requires t >= 0");
  if (t == 0.0) return f;
  return inverse_with(forward(f), [t](const Wavevector& w) { return Complex(std::exp(-t * w.full_norm2), 0.0); });
}

VectorField heat_semigroup(const VectorField& u, double t) {
  std::vector<ScalarField> comps;
  for (const auto& c : u.components()) comps.push_back(heat_semigroup(c, t));
  return VectorField(std::move(comps));
}

VectorField leray_project(const VectorField& u) {
  const int dim = u.dim();
  std::vector<Spectrum> s = forward_all(u.components());
  ModeTable(u.grid()).for_each([&](std::size_t idx, const Wavevector& w) {
    if (w.odd_norm2 == 0.0) return;
    Complex qdotu(0.0, 0.0);
    for (int d = 0; d < dim; ++d) qdotu += w.odd[d] * s[d][idx];
    const Complex scale = qdotu / w.odd_norm2;
    for (int d = 0; d < dim; ++d) s[d][idx] -= w.odd[d] * scale;
  });
  return VectorField(inverse_all(s));
}

ScalarField riesz_second(const ScalarField& f, int i, int j) {
  require_axis(f.grid(), i);
  require_axis(f.grid(), j);
  return inverse_with(forward(f), [i, j](const Wavevector& w) {
    return w.full_norm2 > 0.0 ? Complex(xi_xi(w, i, j) / w.full_norm2, 0.0) : Complex(0.0, 0.0);
  });
}

VectorField cz_riesz(const VectorField& g) {
  const int dim = g.dim();
  std::vector<Spectrum> s = forward_all(g.components());
  ModeTable(g.grid()).for_each([&](std::size_t idx, const Wavevector& w) {
    if (w.full_norm2 == 0.0) {
      for (int d = 0; d < dim; ++d) s[d][idx] = 0.0;
      return;
    }
    Complex qdotg(0.0, 0.0);
    for (int d = 0; d < dim; ++d) qdotg += w.odd[d] * s[d][idx];
    for (int d = 0; d < dim; ++d) s[d][idx] = -w.odd[d] * qdotg / w.full_norm2;
  });
  return VectorField(inverse_all(s));
}

VectorField cz_divergence(const TensorField& F) {
  const int dim = F.dim();
  const std::vector<Spectrum> s = forward_all(F.components());
  std::vector<Spectrum> out(static_cast<std::size_t>(dim), Spectrum(F.grid()));
  ModeTable(F.grid()).for_each([&](std::size_t idx, const Wavevector& w) {
    if (w.full_norm2 == 0.0) return;
    // contraction q_j q_l F_{jl}
    Complex qFq(0.0, 0.0);
    for (int j = 0; j < dim; ++j)
      for (int l = 0; l < dim; ++l) qFq += w.odd[j] * w.odd[l] * s[j * dim + l][idx];
    for (int i = 0; i < dim; ++i) out[i][idx] = -kI * w.odd[i] * qFq / w.full_norm2;
  });
  return VectorField(inverse_all(out));
}

VectorField pressure_gradient(const VectorField& u, const TensorField* F) {
  const Grid& g = u.grid();
  const int dim = u.dim();
  if (F && (!(F->grid() == g) || F->dim() != dim)) throw std::invalid_argument("forcing potential on a different grid");
  const TensorField uu = TensorField::outer(u, u);
  const std::vector<Spectrum> su = forward_all(uu.components());
  std::vector<Spectrum> sf;
  if (F) sf = forward_all(F->components());
  std::vector<Spectrum> out(static_cast<std::size_t>(dim), Spectrum(g));
  ModeTable(g).for_each([&](std::size_t idx, const Wavevector& w) {
    if (w.full_norm2 == 0.0) return;
    // -q_i q_j (u^i u^j)^ + q_j q_l F_{jl}^, the latter being -(div div F)^.
    Complex src(0.0, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double qq = w.odd[i] * w.odd[j];
        src -= qq * su[i * dim + j][idx];
        if (F) src += qq * sf[i * dim + j][idx];
      }
    for (int m = 0; m < dim; ++m) out[m][idx] = kI * w.odd[m] * src / w.full_norm2;
  });
  return VectorField(inverse_all(out));
}

ScalarField dealias(const ScalarField& f) {
  Spectrum s = forward(f);
  DealiasMask::two_thirds(f.grid()).apply(s);
  return inverse(s);
}

}  // namespace bulab::spectral
