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

#include "bulab/inequality/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bulab/carleman/conjugated_operator.hpp"
#include "bulab/spectral/operators.hpp"

namespace bulab::inequality {
namespace {

double weighted_sum(const ScalarField& f, const ScalarField& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i] * f[i];
  return s * f.grid().cell_volume();
}

// sum_m tau_m h(t_m)^{-power} g_m, in doubles below the log-domain threshold
// and by log-sum-exp above it.
LogScalar temporal_sum(const TimeGrid& tg, const std::vector<double>& g, double power, bool log_domain) {
  if (!log_domain) {
    double s = 0.0;
    for (int m = 0; m < tg.frames(); ++m) {
      if (g[m] == 0.0) continue;
      s += tg.trapezoid_weight(m) * std::pow(temporal_weight(tg.time(m)), -power) * g[m];
    }
    if (!std::isfinite(s)) return temporal_sum(tg, g, power, true);
    return LogScalar::from_value(s);
  }
  LogAccumulator acc;
  for (int m = 0; m < tg.frames(); ++m) {
    if (g[m] == 0.0) continue;
    acc.add_log(std::log(tg.trapezoid_weight(m) * g[m]) - power * log_temporal_weight(tg.time(m)), 1);
  }
  return acc.result();
}

bool use_log_domain(double a) { return a >= carleman::kLogDomainThreshold; }

}  // namespace

FrameIntegrals frame_integrals(const SpaceTimeField& u, double spatial_exponent) {
  const TimeGrid& tg = u.time_grid();
  const ScalarField w = sample_spatial_weight(u.grid(), spatial_exponent);
  const SpaceTimeField dt_u = carleman::time_derivative(u);
  FrameIntegrals out{tg, std::vector<double>(tg.frames()), std::vector<double>(tg.frames()),
                     std::vector<double>(tg.frames())};
  for (int m = 0; m < tg.frames(); ++m) {
    const ScalarField& f = u.frame(m);
    out.u2[m] = weighted_sum(f, w);
    if (out.u2[m] != 0.0) {
      const VectorField g = spectral::gradient(f);
      for (const ScalarField& c : g.components()) out.grad2[m] += weighted_sum(c, w);
    }
    ScalarField heat = dt_u.frame(m);
    heat += spectral::laplacian(f);
    out.heat2[m] = weighted_sum(heat, w);
    if (!std::isfinite(out.u2[m] + out.grad2[m] + out.heat2[m])) {
      throw DomainError("non-finite integrand in weighted functional");
    }
  }
  return out;
}

LogScalar theorem_lhs(const FrameIntegrals& f, double a) {
  if (a < 0.0) throw std::invalid_argument("a must be non-negative");
  std::vector<double> g(f.u2.size());
  for (std::size_t m = 0; m < g.size(); ++m) g[m] = (a + 1.0) * f.u2[m] + f.grad2[m];
  return temporal_sum(f.time_grid, g, 2.0 * a + 1.0, use_log_domain(a));
}

LogScalar theorem_rhs(const FrameIntegrals& f, double a) {
  if (a < 0.0) throw std::invalid_argument("a must be non-negative");
  return temporal_sum(f.time_grid, f.heat2, 2.0 * a, use_log_domain(a));
}

LogScalar theorem_lhs(const SpaceTimeField& u, const WeightParams& params) {
  params.validate();
  return theorem_lhs(frame_integrals(u, params.spatial_exponent()), params.a);
}

LogScalar theorem_rhs(const SpaceTimeField& u, const WeightParams& params) {
  params.validate();
  return theorem_rhs(frame_integrals(u, params.spatial_exponent()), params.a);
}

bool RatioReport::lhs_monotone_in_a() const {
  std::map<std::string, std::vector<const RatioRow*>> by_member;
  for (const RatioRow& r : rows) by_member[r.member].push_back(&r);
  for (auto& [member, list] : by_member) {
    std::sort(list.begin(), list.end(), [](const RatioRow* x, const RatioRow* y) { return x->a < y->a; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i]->lhs.log_abs < list[i - 1]->lhs.log_abs) return false;
    }
  }
  return true;
}

bool RatioReport::all_finite() const {
  return std::all_of(rows.begin(), rows.end(), [](const RatioRow& r) {
    return std::isfinite(r.ratio) && std::isfinite(r.lhs.log_abs) && std::isfinite(r.rhs.log_abs);
  });
}

RatioReport theorem_ratio_sweep(const std::vector<FamilyMember>& family, std::span<const double> a_values,
                                double k, ExponentConvention convention, std::string family_name) {
  WeightParams probe{0.0, k, convention};
  probe.validate();
  RatioReport report;
  report.family = std::move(family_name);
  report.convention = convention;
  for (const FamilyMember& member : family) {
    const FrameIntegrals fi = frame_integrals(member.u, probe.spatial_exponent());
    bool skipped = false;
    for (double a : a_values) {
      RatioRow row;
      row.member = member.id;
      row.a = a;
      row.k = k;
      row.lhs = theorem_lhs(fi, a);
      row.rhs = theorem_rhs(fi, a);
      row.grid_points = member.u.grid().points_per_axis();
      row.time_steps = member.u.time_grid().steps();
      row.log_domain = use_log_domain(a);
      if (row.rhs.is_zero()) {
        skipped = true;
        break;
      }
      row.ratio = log_ratio(row.lhs, row.rhs);
      report.c_emp = std::max(report.c_emp, row.ratio);
      report.rows.push_back(std::move(row));
    }
    if (skipped) report.skipped.push_back(member.id);
  }
  return report;
}

}  // namespace bulab::inequality
