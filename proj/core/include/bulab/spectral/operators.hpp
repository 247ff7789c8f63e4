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

#include "bulab/field/fields.hpp"
#include "bulab/spectral/transform.hpp"

namespace bulab::spectral {

// Symbol conventions shared by every operator below (xi = angular wavevector):
//   single derivatives use Wavevector::odd, so the Nyquist mode of a
//   differentiated axis is dropped; the Laplacian and Riesz diagonals use
//   Wavevector::full, so that sum_i d_i d_i == laplacian and
//   sum_i R_ii == I - mean hold exactly.
//   (-Delta)^{-1}-type symbols map xi = 0 to 0 (mean-free convention).

/// Multiplier -|xi|^2.
ScalarField laplacian(const ScalarField& f);
/// Multiplier i xi_axis.
ScalarField partial(const ScalarField& f, int axis);
/// Multiplier -xi_i xi_j (odd entries off the diagonal, full on it).
ScalarField second_partial(const ScalarField& f, int i, int j);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& u);
/// (div F)_j = sum_l d_l F_{jl}.
VectorField divergence(const TensorField& F);
/// i xi x u; dim must be 3.
VectorField curl(const VectorField& u);

/// Multiplier 1/|xi|^2, 0 at xi = 0.
ScalarField inverse_neg_laplacian(const ScalarField& f);

/// Multiplier e^{-t |xi|^2}. Throws DomainError for t < 0: the backward heat
/// flow is ill-posed and deliberately unavailable.
ScalarField heat_semigroup(const ScalarField& f, double t);
VectorField heat_semigroup(const VectorField& u, double t);

/// Leray projector onto discretely divergence-free fields: I - q q^T/|q|^2
/// with q = Wavevector::odd. Modes with q = 0 (the mean and pure-Nyquist
/// modes, which the discrete divergence cannot see) pass through unchanged.
VectorField leray_project(const VectorField& u);

/// (-Delta)^{-1} d_i d_j, multiplier xi_i xi_j / |xi|^2, 0 at xi = 0.
ScalarField riesz_second(const ScalarField& f, int i, int j);

/// Zeroth-order operator grad (-Delta)^{-1} div on vector fields:
/// multiplier -q q^T / |xi|^2.
VectorField cz_riesz(const VectorField& g);

/// grad (-Delta)^{-1} div applied to div F: multiplier
/// -i q_i q_j q_l / |xi|^2 contracted with F_{jl}.
VectorField cz_divergence(const TensorField& F);

/// grad p = grad(-Delta)^{-1} d_i d_j (u^i u^j) - grad(-Delta)^{-1} div f,
/// with f = div F. Pass F = nullptr for unforced flow.
VectorField pressure_gradient(const VectorField& u, const TensorField* F = nullptr);

/// Zeroes all modes outside the 2/3-rule ball.
ScalarField dealias(const ScalarField& f);

}  // namespace bulab::spectral
