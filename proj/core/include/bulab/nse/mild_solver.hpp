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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bulab/field/fields.hpp"
#include "bulab/spectral/transform.hpp"

namespace bulab::nse {

enum class Scheme { kIntegratingFactorRk2, kIntegratingFactorRk4 };
std::string_view to_string(Scheme s) noexcept;
Scheme parse_scheme(std::string_view text);

/// Which optional diagnostics a run records; the cheap ones are always on.
struct DiagnosticsOptions {
  bool swirl = false;
  bool symmetry = false;
  std::vector<double> symmetry_angles{0.5, 1.0, 2.0};
};

/// Unit viscosity, periodic box. The nonlinearity is
///   N(u) = P[-div(u (x) u) + div F]
/// and the linear part is integrated exactly by e^{t Delta}.
struct MildSolverConfig {
  double dt = 1e-3;
  double total_time = 1.0;
  bool dealias = true;
  Scheme scheme = Scheme::kIntegratingFactorRk4;
  /// Time-independent tensor potential of the forcing, f = div F.
  std::optional<TensorField> forcing;
  /// Store every n-th state in the trajectory; 0 keeps only the final state.
  int store_every = 0;
  DiagnosticsOptions diagnostics{};

  void validate() const;
};

struct Diagnostics {
  int step = 0;
  double t = 0.0;
  double energy = 0.0;     ///< 1/2 ||u||^2
  double enstrophy = 0.0;  ///< 1/2 ||grad u||^2
  double div_norm = 0.0;   ///< ||div u||
  double swirl_fraction = 0.0;
  double symmetry_defect = 0.0;
  double boundary_energy_fraction = 0.0;  ///< energy share in the outer shell max_i |x_i| > 3L/8
};

struct Trajectory {
  std::vector<double> times;         ///< times of stored states
  std::vector<VectorField> states;   ///< stored states
  std::vector<Diagnostics> diagnostics;  ///< one row per step, starting at t = 0
  VectorField final_state;           ///< last good state
  double final_time = 0.0;
  bool aborted = false;
  std::string abort_reason;
};

/// Spectral-space integrator. The state is kept Leray-projected and, when
/// dealias is on, restricted to the 2/3 ball.
class MildSolver {
 public:
  MildSolver(const Grid& grid, MildSolverConfig config);

  const Grid& grid() const noexcept { return grid_; }
  const MildSolverConfig& config() const noexcept { return config_; }

  using State = std::vector<spectral::Spectrum>;

  State to_state(const VectorField& u) const;  ///< forward, project, dealias
  VectorField to_field(const State& s) const;

  /// N(u) in spectral form.
  State nonlinearity(const State& s) const;
  /// e^{tau Delta} applied componentwise.
  State heat(const State& s, double tau) const;
  /// One Lawson RK step of size dt. Throws DomainError on an advective CFL
  /// violation dt > dx / (2 max|u|).
  State step(const State& s, double dt) const;

  /// L^2 norm via Parseval.
  double norm(const State& s) const;
  Diagnostics diagnose(const State& s, int step, double t) const;

 private:
  void project_and_truncate(State& s) const;

  Grid grid_;
  MildSolverConfig config_;
  std::vector<double> lap_;          // -|xi|^2 per stored mode
  std::vector<std::array<double, 3>> q_;  // odd wavevector per stored mode
  std::vector<int> multiplicity_;
  std::vector<std::uint8_t> keep_;
  std::optional<State> forcing_;     // P div F, constant in time
};

/// u <- one step of size dt.
VectorField step_mild(const VectorField& u, double dt, const MildSolverConfig& config);

/// Marches u0 (projected first) to config.total_time. Non-finite values stop
/// the run and keep the last good state.
Trajectory solve(const VectorField& u0, const MildSolverConfig& config);

struct PicardResult {
  VectorField state;               ///< final iterate at the horizon
  std::vector<double> distances;   ///< max over nodes of ||u^{n+1} - u^n||, per iteration
};

/// Fixed-point iteration of the Duhamel map on a uniform node set with the
/// trapezoid rule under the heat semigroup. Throws DomainError when the
/// iterates stop contracting.
PicardResult picard_iterate(const VectorField& u0, double horizon, int iterations, int nodes,
                            const MildSolverConfig& config);

}  // namespace bulab::nse
