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

#include "bulab/nse/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bulab/spectral/operators.hpp"

namespace bulab::nse {
namespace {

void require_3d(const VectorField& u) {
  if (u.dim() != 3) throw std::invalid_argument("cylindrical diagnostics need a 3-D field");
}

bool in_inner_ball(const Grid& g, const Point& x) {
  const double r = 0.25 * g.box_length();
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] < r * r;
}

double gaussian(const Point& x, double sigma) {
  return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (sigma * sigma));
}

}  // namespace

CylindricalDecomposition cylindrical_decompose(const VectorField& u) {
  require_3d(u);
  const Grid& g = u.grid();
  CylindricalDecomposition c{ScalarField(g), ScalarField(g), ScalarField(g),
                             std::vector<std::uint8_t>(g.size(), 0), 2.0 * g.spacing()};
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const Point x = g.point(idx);
    const double r = std::hypot(x[0], x[1]);
    if (r < c.axis_tube_radius) continue;
    c.valid[idx] = 1;
    c.u_r[idx] = (x[0] * u[0][idx] + x[1] * u[1][idx]) / r;
    c.u_theta[idx] = (x[0] * u[1][idx] - x[1] * u[0][idx]) / r;
    c.u_z[idx] = u[2][idx];
  }
  return c;
}

VectorField reassemble(const CylindricalDecomposition& c) {
  const Grid& g = c.u_r.grid();
  VectorField u(g);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (!c.valid[idx]) continue;
    const Point x = g.point(idx);
    const double r = std::hypot(x[0], x[1]);
    const double cs = x[0] / r;
    const double sn = x[1] / r;
    u[0][idx] = c.u_r[idx] * cs - c.u_theta[idx] * sn;
    u[1][idx] = c.u_r[idx] * sn + c.u_theta[idx] * cs;
    u[2][idx] = c.u_z[idx];
  }
  return u;
}

double swirl_fraction(const VectorField& u) {
  const CylindricalDecomposition c = cylindrical_decompose(u);
  const Grid& g = u.grid();
  double swirl = 0.0;
  double total = 0.0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (!c.valid[idx] || !in_inner_ball(g, g.point(idx))) continue;
    swirl += c.u_theta[idx] * c.u_theta[idx];
    total += u[0][idx] * u[0][idx] + u[1][idx] * u[1][idx] + u[2][idx] * u[2][idx];
  }
  return total > 0.0 ? swirl / total : 0.0;
}

Point interpolate(const VectorField& u, const Point& x) {
  const Grid& g = u.grid();
  const int n = g.points_per_axis();
  const int dim = g.dim();
  std::array<int, 3> i0{0, 0, 0};
  std::array<double, 3> frac{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) {
    const double s = (x[a] + 0.5 * g.box_length()) / g.spacing();
    const double fl = std::floor(s);
    frac[a] = s - fl;
    i0[a] = static_cast<int>(((static_cast<long>(fl) % n) + n) % n);
  }
  Point out{0.0, 0.0, 0.0};
  const int corners = 1 << dim;
  for (int c = 0; c < corners; ++c) {
    double w = 1.0;
    LatticeIndex idx{0, 0, 0};
    for (int a = 0; a < dim; ++a) {
      const int bit = (c >> a) & 1;
      w *= bit ? frac[a] : 1.0 - frac[a];
      idx[a] = (i0[a] + bit) % n;
    }
    const std::size_t lin = g.ravel(idx);
    for (int comp = 0; comp < dim; ++comp) out[comp] += w * u[comp][lin];
  }
  return out;
}

double symmetry_defect(const VectorField& u, std::span<const double> angles) {
  require_3d(u);
  const Grid& g = u.grid();
  double worst = 0.0;
  for (double phi : angles) {
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    double sum = 0.0;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      const Point x = g.point(idx);
      if (!in_inner_ball(g, x)) continue;
      // S_phi = [[c, s, 0], [-s, c, 0], [0, 0, 1]], so S_{-phi} x has the sign of s flipped.
      const Point y{cs * x[0] - sn * x[1], sn * x[0] + cs * x[1], x[2]};
      const Point v = interpolate(u, y);
      const double w0 = cs * v[0] + sn * v[1] - u[0][idx];
      const double w1 = -sn * v[0] + cs * v[1] - u[1][idx];
      const double w2 = v[2] - u[2][idx];
      sum += w0 * w0 + w1 * w1 + w2 * w2;
    }
    worst = std::max(worst, std::sqrt(sum * g.cell_volume()));
  }
  return worst;
}

VectorField axisymmetric_no_swirl_field(const Grid& grid, double amplitude, double sigma) {
  if (grid.dim() != 3) throw std::invalid_argument("axisymmetric fields need a 3-D grid");
  VectorField a(grid);
  a[0] = ScalarField::sample(grid, [&](const Point& x) { return -amplitude * gaussian(x, sigma) * x[1]; });
  a[1] = ScalarField::sample(grid, [&](const Point& x) { return amplitude * gaussian(x, sigma) * x[0]; });
  return spectral::leray_project(spectral::curl(a));
}

VectorField azimuthal_field(const Grid& grid, double sigma) {
  VectorField u(grid);
  u[0] = ScalarField::sample(grid, [&](const Point& x) { return -gaussian(x, sigma) * x[1]; });
  u[1] = ScalarField::sample(grid, [&](const Point& x) { return gaussian(x, sigma) * x[0]; });
  return u;
}

VectorField radial_field(const Grid& grid, double sigma) {
  VectorField u(grid);
  u[0] = ScalarField::sample(grid, [&](const Point& x) { return gaussian(x, sigma) * x[0]; });
  u[1] = ScalarField::sample(grid, [&](const Point& x) { return gaussian(x, sigma) * x[1]; });
  return u;
}

}  // namespace bulab::nse
