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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/field/grid.hpp"

namespace bulab::spectral {

using Complex = std::complex<double>;

/// Half-complex coefficients of a real field on a Grid.
///
/// Layout matches a real-to-complex transform: shape (N, N, N/2+1) in 3-D
/// and (N, N/2+1) in 2-D, last axis fastest. Normalization is unitary:
/// forward and inverse both carry 1/sqrt(N^dim).
class Spectrum {
 public:
  explicit Spectrum(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::vector<Complex>& data() noexcept { return coeffs_; }
  const std::vector<Complex>& data() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Complex& operator[](std::size_t i) noexcept { return coeffs_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return coeffs_[i]; }

  Spectrum& operator+=(const Spectrum& other);
  Spectrum& operator-=(const Spectrum& other);
  Spectrum& operator*=(double s) noexcept;
  Spectrum& add_scaled(double s, const Spectrum& other);

 private:
  Grid grid_;
  std::vector<Complex> coeffs_;
};

/// Number of half-complex coefficients for a grid.
std::size_t spectrum_size(const Grid& grid) noexcept;

Spectrum forward(const ScalarField& f);
ScalarField inverse(const Spectrum& s);

/// Angular wavevector of one stored mode.
///
/// `full` carries 2*pi/L times the signed integer wavenumber (Nyquist index
/// maps to -N/2). `odd` is the same vector with Nyquist entries set to zero;
/// odd-order symbols (i*xi) use it so real fields stay real. Even-order
/// symbols that must sum exactly (the Laplacian, Riesz diagonals) use `full`.
struct Wavevector {
  std::array<double, 3> full{0.0, 0.0, 0.0};
  std::array<double, 3> odd{0.0, 0.0, 0.0};
  std::array<int, 3> integer{0, 0, 0};
  double full_norm2 = 0.0;
  double odd_norm2 = 0.0;
  /// 1 for modes that are their own conjugate partner, 2 otherwise.
  int multiplicity = 2;
};

/// Per-axis wavenumber tables for a grid.
class ModeTable {
 public:
  explicit ModeTable(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }

  /// Calls fn(index, wavevector) for every stored coefficient in layout order.
  template <typename Fn>
  void for_each(Fn&& fn) const;

 private:
  Grid grid_;
  int half_;  // N/2 + 1
  std::vector<double> full_;
  std::vector<double> odd_;
  std::vector<int> integer_;
};

/// Fourier multiplier tabulated over the stored half lattice.
struct SpectralMultiplier {
  Grid grid;
  std::vector<Complex> values;

  template <typename Symbol>
  static SpectralMultiplier tabulate(const Grid& grid, Symbol&& symbol);

  void apply(Spectrum& s) const;
  ScalarField apply(const ScalarField& f) const;
};

/// 2/3-rule mask: keeps integer wavevectors with |k| < N/3.
struct DealiasMask {
  Grid grid;
  std::vector<std::uint8_t> keep;

  static DealiasMask two_thirds(const Grid& grid);
  void apply(Spectrum& s) const;
  std::size_t kept_modes() const noexcept;
};

/// Returns inverse(symbol * s) without modifying s.
template <typename Symbol>
ScalarField inverse_with(const Spectrum& s, Symbol&& symbol);

/// Spectral pairing sum_k multiplicity * Re(f_k conj(g_k)) * dx^dim, equal to
/// the physical-space pairing by Parseval.
double spectral_inner_product(const Spectrum& f, const Spectrum& g);

// ---------------------------------------------------------------------------

template <typename Fn>
void ModeTable::for_each(Fn&& fn) const {
  const int n = grid_.points_per_axis();
  const int dim = grid_.dim();
  Wavevector w;
  std::size_t index = 0;
  if (dim == 2) {
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < half_; ++l, ++index) {
        w.full = {full_[i], full_[l], 0.0};
        w.odd = {odd_[i], odd_[l], 0.0};
        w.integer = {integer_[i], integer_[l], 0};
        w.full_norm2 = w.full[0] * w.full[0] + w.full[1] * w.full[1];
        w.odd_norm2 = w.odd[0] * w.odd[0] + w.odd[1] * w.odd[1];
        w.multiplicity = (l == 0 || l == n / 2) ? 1 : 2;
        fn(index, static_cast<const Wavevector&>(w));
      }
    }
    return;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < half_; ++l, ++index) {
        w.full = {full_[i], full_[j], full_[l]};
        w.odd = {odd_[i], odd_[j], odd_[l]};
        w.integer = {integer_[i], integer_[j], integer_[l]};
        w.full_norm2 = w.full[0] * w.full[0] + w.full[1] * w.full[1] + w.full[2] * w.full[2];
        w.odd_norm2 = w.odd[0] * w.odd[0] + w.odd[1] * w.odd[1] + w.odd[2] * w.odd[2];
        w.multiplicity = (l == 0 || l == n / 2) ? 1 : 2;
        fn(index, static_cast<const Wavevector&>(w));
      }
    }
  }
}

template <typename Symbol>
SpectralMultiplier SpectralMultiplier::tabulate(const Grid& grid, Symbol&& symbol) {
  SpectralMultiplier m{grid, std::vector<Complex>(spectrum_size(grid))};
  ModeTable(grid).for_each([&](std::size_t idx, const Wavevector& w) { m.values[idx] = symbol(w); });
  return m;
}

template <typename Symbol>
ScalarField inverse_with(const Spectrum& s, Symbol&& symbol) {
  Spectrum work(s.grid());
  ModeTable(s.grid()).for_each(
      [&](std::size_t idx, const Wavevector& w) { work[idx] = symbol(w) * s[idx]; });
  return inverse(work);
}

}  // namespace bulab::spectral
