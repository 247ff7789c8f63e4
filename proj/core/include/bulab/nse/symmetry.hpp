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

#include <cstdint>
#include <span>
#include <vector>

#include "bulab/field/fields.hpp"

namespace bulab::nse {

/// Cylindrical components sampled at the Cartesian lattice points. Points
/// inside the axis tube r < 2 dx are flagged invalid and hold zeros.
struct CylindricalDecomposition {
  ScalarField u_r;
  ScalarField u_theta;
  ScalarField u_z;
  std::vector<std::uint8_t> valid;
  double axis_tube_radius = 0.0;
};

/// Requires dim == 3.
CylindricalDecomposition cylindrical_decompose(const VectorField& u);
/// u_r e_r + u_theta e_theta + u_z e_z; zero inside the axis tube.
VectorField reassemble(const CylindricalDecomposition& c);

/// ||u_theta||^2 / ||u||^2 over the ball |x| < L/4 minus the axis tube.
double swirl_fraction(const VectorField& u);

/// u at an arbitrary point by periodic trilinear interpolation.
Point interpolate(const VectorField& u, const Point& x);

/// max over phi of the L^2 norm over |x| < L/4 of S_phi u(S_{-phi} x) - u(x),
/// with S_phi the rotation by phi about the x3 axis.
double symmetry_defect(const VectorField& u, std::span<const double> angles);

/// curl of psi(|x|) (-x2, x1, 0) with psi = amplitude exp(-|x|^2/sigma^2),
/// then Leray-projected: axisymmetric with zero swirl.
VectorField axisymmetric_no_swirl_field(const Grid& grid, double amplitude, double sigma);

/// g(r, z) (-x2, x1, 0): purely azimuthal.
VectorField azimuthal_field(const Grid& grid, double sigma);
/// g(r, z) (x1, x2, 0): purely radial.
VectorField radial_field(const Grid& grid, double sigma);

}  // namespace bulab::nse
