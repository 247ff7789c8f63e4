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

#include <functional>
#include <span>

#include "bulab/field/fields.hpp"
#include "bulab/field/log_scalar.hpp"

namespace bulab {

using SpatialWeightFn = std::function<double(const Point&)>;
using TemporalWeightFn = std::function<double(double)>;

/// Rectangle rule in space: sum_i w(x_i) f(x_i) dx^dim.
/// Throws DomainError if the integrand is not finite.
double weighted_integral(const ScalarField& f, const SpatialWeightFn& w_spatial);

/// Same with pre-sampled weights (w.size() == f.size()).
double weighted_integral(const ScalarField& f, std::span<const double> w_spatial);

/// Rectangle rule in space, trapezoid in time:
/// sum_m tau_m w_t(t_m) sum_i w_x(x_i) f(x_i, t_m) dx^dim.
double weighted_integral(const SpaceTimeField& f, const SpatialWeightFn& w_spatial,
                         const TemporalWeightFn& w_temporal);

/// Log-domain variant for temporal weights that overflow: the caller passes
/// log w_t instead of w_t.
LogScalar log_weighted_integral(const SpaceTimeField& f, const SpatialWeightFn& w_spatial,
                                const TemporalWeightFn& log_w_temporal);

/// Discrete L^2 pairing sum f g dx^dim.
double inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField& f, const VectorField& g);
/// Space-time pairing sum_m sum_i f g dx^dim dt over all M+1 frames.
double inner_product(const SpaceTimeField& f, const SpaceTimeField& g);

double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& f);
double l2_norm(const SpaceTimeField& f);

}  // namespace bulab
