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

#include "bulab/spectral/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace bulab::spectral {
namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are created once per (dim, N) with FFTW_ESTIMATE so the chosen
// algorithm, and therefore every result bit, is reproducible run to run.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
  }
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(const Grid& grid) {
  static std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> cache;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto key = std::make_pair(grid.dim(), grid.points_per_axis());
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  const int n = grid.points_per_axis();
  int dims[3] = {n, n, n};
  std::vector<double> real(grid.size());
  std::vector<Complex> cplx(spectrum_size(grid));
  auto pair = std::make_unique<PlanPair>();
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  pair->forward = fftw_plan_dft_r2c(grid.dim(), dims, real.data(),
                                    reinterpret_cast<fftw_complex*>(cplx.data()), flags);
  pair->inverse = fftw_plan_dft_c2r(grid.dim(), dims, reinterpret_cast<fftw_complex*>(cplx.data()),
                                    real.data(), flags);
  if (!pair->forward || !pair->inverse) throw std::runtime_error("FFTW planning failed");
  auto& ref = *pair;
  cache.emplace(key, std::move(pair));
  return ref;
}

}  // namespace

std::size_t spectrum_size(const Grid& grid) noexcept {
  const std::size_t n = static_cast<std::size_t>(grid.points_per_axis());
  return grid.dim() == 2 ? n * (n / 2 + 1) : n * n * (n / 2 + 1);
}

Spectrum::Spectrum(const Grid& grid) : grid_(grid), coeffs_(spectrum_size(grid)) {}

Spectrum& Spectrum::operator+=(const Spectrum& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("spectra on different grids");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("spectra on different grids");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Spectrum& Spectrum::operator*=(double s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Spectrum& Spectrum::add_scaled(double s, const Spectrum& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("spectra on different grids");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * other.coeffs_[i];
  return *this;
}

Spectrum forward(const ScalarField& f) {
  const Grid& grid = f.grid();
  const PlanPair& plans = plans_for(grid);
  Spectrum out(grid);
  // Out-of-place r2c leaves its input untouched.
  fftw_execute_dft_r2c(plans.forward, const_cast<double*>(f.samples().data()),
                       reinterpret_cast<fftw_complex*>(out.data().data()));
  out *= 1.0 / std::sqrt(static_cast<double>(grid.size()));
  return out;
}

ScalarField inverse(const Spectrum& s) {
  const Grid& grid = s.grid();
  const PlanPair& plans = plans_for(grid);
  // c2r overwrites its input.
  std::vector<Complex> work = s.data();
  ScalarField out(grid);
  fftw_execute_dft_c2r(plans.inverse, reinterpret_cast<fftw_complex*>(work.data()), out.data().data());
  out *= 1.0 / std::sqrt(static_cast<double>(grid.size()));
  return out;
}

ModeTable::ModeTable(const Grid& grid) : grid_(grid), half_(grid.points_per_axis() / 2 + 1) {
  const int n = grid.points_per_axis();
  const double scale = 2.0 * std::numbers::pi / grid.box_length();
  full_.resize(n);
  odd_.resize(n);
  integer_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int k = i < n / 2 ? i : i - n;
    integer_[i] = k;
    full_[i] = scale * k;
    odd_[i] = (i == n / 2) ? 0.0 : scale * k;
  }
}

void SpectralMultiplier::apply(Spectrum& s) const {
  if (!(s.grid() == grid)) throw std::invalid_argument("multiplier and spectrum on different grids");
  for (std::size_t i = 0; i < values.size(); ++i) s[i] *= values[i];
}

ScalarField SpectralMultiplier::apply(const ScalarField& f) const {
  Spectrum s = forward(f);
  apply(s);
  return inverse(s);
}

DealiasMask DealiasMask::two_thirds(const Grid& grid) {
  DealiasMask mask{grid, std::vector<std::uint8_t>(spectrum_size(grid), 0)};
  const double cutoff = grid.points_per_axis() / 3.0;
  const double cutoff2 = cutoff * cutoff;
  ModeTable(grid).for_each([&](std::size_t idx, const Wavevector& w) {
    const double k2 = static_cast<double>(w.integer[0]) * w.integer[0] +
                      static_cast<double>(w.integer[1]) * w.integer[1] +
                      static_cast<double>(w.integer[2]) * w.integer[2];
    mask.keep[idx] = k2 < cutoff2 ? 1 : 0;
  });
  return mask;
}

void DealiasMask::apply(Spectrum& s) const {
  if (!(s.grid() == grid)) throw std::invalid_argument("mask and spectrum on different grids");
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (!keep[i]) s[i] = Complex(0.0, 0.0);
}

std::size_t DealiasMask::kept_modes() const noexcept {
  std::size_t n = 0;
  for (auto k : keep) n += k;
  return n;
}

double spectral_inner_product(const Spectrum& f, const Spectrum& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("spectra on different grids");
  double sum = 0.0;
  ModeTable(f.grid()).for_each([&](std::size_t idx, const Wavevector& w) {
    sum += w.multiplicity * (f[idx].real() * g[idx].real() + f[idx].imag() * g[idx].imag());
  });
  return sum * f.grid().cell_volume();
}

}  // namespace bulab::spectral
