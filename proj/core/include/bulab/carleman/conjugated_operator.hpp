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

#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/field/log_scalar.hpp"
#include "bulab/field/separable.hpp"
#include "bulab/field/weights.hpp"

namespace bulab::carleman {

/// Parameters of the conjugated heat operator
///   L = h^{-(a+1)} (1+|x|^2)^{-k} (d_t + Delta) h^{a+1} (1+|x|^2)^{k},  A = t L,
/// and of its split A = J + K into symmetric and skew-symmetric parts.
struct CarlemanParams {
  WeightParams weight;  // a and k; the convention field is not used here
  Grid grid;
  TimeGrid time_grid;

  int n() const noexcept { return grid.dim(); }
  void validate() const;
};

/// V1(x) = 64k|x|^2/(1+|x|^2)^3 - (16kn+32k)/(1+|x|^2)^2.
double potential_v1(double r2, double k, int n) noexcept;
/// V2(x) = -(4n+8)kn/(1+|x|^2)^2 + (32kn+64k-32k^3)|x|^2/(1+|x|^2)^3
///         + (64k^3-96k)|x|^4/(1+|x|^2)^4.
double potential_v2(double r2, double k, int n) noexcept;

/// V1 and V2 sampled on a grid.
struct PotentialProfile {
  ScalarField v1;
  ScalarField v2;

  static PotentialProfile sample(const Grid& grid, double k);
};

/// Centered difference in time on interior frames with zero extension past
/// both ends (exact for compactly supported fields).
SpaceTimeField time_derivative(const SpaceTimeField& u);
std::vector<double> time_derivative(const std::vector<double>& profile, double dt);

/// v scaled as exp(log_scale) * values, so weights like h^{-(a+1)} survive
/// large a. log_scale is 0 when no rescaling was needed. One scale covers all
/// frames, so frames more than about e^{-700} below the peak underflow to 0.
struct LogScaledField {
  SpaceTimeField values;
  double log_scale = 0.0;
  bool rescaled = false;
};

/// Carleman parameter at and above which weighted quantities go log-domain.
inline constexpr double kLogDomainThreshold = 200.0;

/// Discrete realizations of L, A, J, K and of [J, K] on space-time fields.
///
/// d_t is centered differencing, Delta and grad are spectral, and every
/// weight factor is sampled from its closed form. Each operator is provided
/// on dense frame-by-frame fields and on SeparableField; the two agree to
/// rounding because they apply the same time and space factors.
class ConjugatedOperators {
 public:
  explicit ConjugatedOperators(const CarlemanParams& params);

  const CarlemanParams& params() const noexcept { return params_; }

  SpaceTimeField apply_L(const SpaceTimeField& u) const;
  SpaceTimeField apply_A(const SpaceTimeField& v) const;
  /// J = t Delta + 4k^2 t|x|^2/(1+|x|^2)^2 + (a+1)(1-t) - 1/2.
  SpaceTimeField apply_J(const SpaceTimeField& v) const;
  /// K = t d_t + 4kt x.grad/(1+|x|^2) + 2kt(n/(1+|x|^2) - 2|x|^2/(1+|x|^2)^2) + 1/2.
  SpaceTimeField apply_K(const SpaceTimeField& v) const;
  /// J K v - K J v by composition.
  SpaceTimeField apply_bracket_direct(const SpaceTimeField& v) const;
  /// The closed form
  ///   (a+1)t - t Delta - 4k^2 t|x|^2/(1+|x|^2)^2 + 8kt^2 Delta/(1+|x|^2)
  ///   - 16kt^2 (x (x) x)::grad^2/(1+|x|^2)^2 + t^2 V1 x.grad + t^2 V2.
  SpaceTimeField apply_bracket_explicit(const SpaceTimeField& v) const;

  SeparableField apply_L(const SeparableField& u) const;
  SeparableField apply_A(const SeparableField& v) const;
  SeparableField apply_J(const SeparableField& v) const;
  SeparableField apply_K(const SeparableField& v) const;
  SeparableField apply_bracket_direct(const SeparableField& v) const;
  SeparableField apply_bracket_explicit(const SeparableField& v) const;

  /// Frame values of the spatial parts, exposed for tests.
  ScalarField drift(const ScalarField& f) const;                ///< 4k x.grad f/(1+|x|^2)
  ScalarField hessian_contraction(const ScalarField& f) const;  ///< sum_ij x_i x_j d_i d_j f

 private:
  struct FrameDerivatives;
  FrameDerivatives derivatives(const ScalarField& f, bool need_hessian) const;

  ScalarField j_spatial(const ScalarField& f) const;         // Delta f + 4k^2|x|^2/(1+|x|^2)^2 f
  ScalarField k_spatial(const ScalarField& f) const;         // drift f + P f
  ScalarField l_spatial(const ScalarField& f) const;         // Delta f + drift f + (2kn/q + 4k(k-1)|x|^2/q^2) f
  ScalarField bracket_t_part(const ScalarField& f) const;    // (a+1) f - Delta f - W f
  ScalarField bracket_t2_part(const ScalarField& f) const;   // 8k Delta f/q - 16k H f/q^2 + V1 x.grad f + V2 f

  double j_time_coefficient(double t) const noexcept;  // (a+1)(1-t) - 1/2
  double l_time_coefficient(double t) const noexcept;  // (a+1) h'(t)/h(t)

  CarlemanParams params_;
  std::vector<ScalarField> x_;      // coordinate fields
  ScalarField inv_q_;               // 1/(1+|x|^2)
  ScalarField w_j_;                 // 4k^2|x|^2/(1+|x|^2)^2
  ScalarField p_k_;                 // 2k(n/(1+|x|^2) - 2|x|^2/(1+|x|^2)^2)
  ScalarField l_potential_;         // 2kn/(1+|x|^2) + 4k(k-1)|x|^2/(1+|x|^2)^2
  ScalarField lap_coeff_;           // 8k/(1+|x|^2)
  ScalarField hess_coeff_;          // 16k/(1+|x|^2)^2
  PotentialProfile potentials_;
};

/// v = h(t)^{-(a+1)} (1+|x|^2)^{-k} u. Switches to a log-scaled
/// representation when a >= kLogDomainThreshold or the weight overflows.
LogScaledField v_transform(const SpaceTimeField& u, const CarlemanParams& params);
/// Inverse pointwise map back to u.
SpaceTimeField inverse_v_transform(const LogScaledField& v, const CarlemanParams& params);

/// Both sides of ||A v||^2 ~ int h^{-2a}(1+|x|^2)^{-2k}|d_t u + Delta u|^2.
struct ConjugationEquivalence {
  LogScalar norm_av_squared;
  LogScalar weighted_rhs;
  double ratio = 0.0;  ///< norm_av_squared / weighted_rhs
  double lower = 1.0;  ///< e^{2 T-} >= 1
  double upper = 1.0;  ///< e^{2 T+}
  bool rescaled = false;
};
ConjugationEquivalence conjugation_equivalence(const SpaceTimeField& u, const CarlemanParams& params);

}  // namespace bulab::carleman
