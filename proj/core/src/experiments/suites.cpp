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


#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bulab/carleman/conjugated_operator.hpp"
#include "bulab/carleman/matrix_lemma.hpp"
#include "bulab/experiments/parallel.hpp"
#include "bulab/experiments/runner.hpp"
#include "bulab/field/bumps.hpp"
#include "bulab/field/field_io.hpp"
#include "bulab/field/quadrature.hpp"
#include "bulab/field/separable.hpp"
#include "bulab/inequality/cutoff.hpp"
#include "bulab/inequality/cz_estimate.hpp"
#include "bulab/inequality/families.hpp"
#include "bulab/inequality/theorem.hpp"
#include "bulab/nse/exact_flows.hpp"
#include "bulab/nse/mild_solver.hpp"
#include "bulab/nse/separation.hpp"
#include "bulab/nse/symmetry.hpp"
#include "bulab/spectral/operators.hpp"

namespace bulab::experiments {
namespace {

std::string num(double v) { return format_number(v); }
std::string num(int v) { return format_number(v); }
std::string num(long v) { return std::to_string(v); }

std::string log_text(const LogScalar& s) { return s.is_zero() ? "-inf" : num(s.log_abs); }

// Wraps module parsing so a bad value names its key.
template <typename Parse>
auto parse_key(const std::string& key, Parse&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

bool energy_monotone(const std::vector<nse::Diagnostics>& d, double slack = 1e-12) {
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (!(d[i].energy <= d[i - 1].energy * (1.0 + slack))) return false;
  }
  return true;
}

double worst_divergence(const std::vector<nse::Diagnostics>& d) {
  double worst = 0.0;
  for (const nse::Diagnostics& row : d) {
    const double norm = std::sqrt(2.0 * row.energy);
    if (norm > 0.0) worst = std::max(worst, row.div_norm / norm);
  }
  return worst;
}

Table diagnostics_table(const std::vector<nse::Diagnostics>& d) {
  Table t;
  t.header = {"step", "t", "energy", "enstrophy", "div_norm", "swirl_fraction", "symmetry_defect",
              "boundary_energy_fraction"};
  for (const nse::Diagnostics& r : d) {
    t.rows.push_back({num(r.step), num(r.t), num(r.energy), num(r.enstrophy), num(r.div_norm),
                      num(r.swirl_fraction), num(r.symmetry_defect), num(r.boundary_energy_fraction)});
  }
  return t;
}

Series diagnostic_series(const std::vector<nse::Diagnostics>& d, std::string plot, std::string label,
                         double nse::Diagnostics::*field, bool log_y) {
  Series s{std::move(plot), label, "t", std::move(label), false, log_y, {}, {}};
  for (const nse::Diagnostics& r : d) {
    s.x.push_back(r.t);
    s.y.push_back(r.*field);
  }
  return s;
}

void check_trajectory(ExperimentReport& report, const std::string& name, const nse::Trajectory& tr) {
  report.check(name + ".completed", !tr.aborted, tr.abort_reason);
  report.check(name + ".energy_monotone", energy_monotone(tr.diagnostics),
               "E(m+1) <= E(m) (1 + 1e-12) at every step");
  const double div = worst_divergence(tr.diagnostics);
  report.check(name + ".divergence_free", div <= 1e-10, "max ||div u|| / ||u|| = " + num(div));
}

}  // namespace

void run_matrix_lemma_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const carleman::LemmaSweepReport sweep = carleman::lemma_random_sweep(
      cfg.get_int("matrices"), cfg.get_int("vectors"), cfg.get_int("min_dim"), cfg.get_int("max_dim"),
      cfg.require_seed());
  report.table.header = {"matrix_class", "matrices", "trials", "failures", "worst_normalized_slack"};
  for (const auto& row : sweep.rows) {
    const std::string cls(carleman::to_string(row.matrix_class));
    report.table.rows.push_back({cls, num(row.matrices), num(row.totals.trials), num(row.totals.failures),
                                 num(row.totals.worst_normalized_slack)});
    report.check("lemma." + cls, row.totals.passed(),
                 num(row.totals.failures) + " failures in " + num(row.totals.trials) + " trials");
  }

  // [[0,1],[0,0]] has [J,K] = diag(-1/2, 1/2); at x = e2, ||Ax||^2 = 1 and the form is 1/2.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  Eigen::VectorXd x(2);
  x << 0.0, 1.0;
  const carleman::LemmaSlack s = carleman::lemma_slack(a, x);
  report.check("lemma.nilpotent_2x2", s.holds() && std::abs(s.norm_ax_squared - 1.0) <= 1e-15 &&
                                          std::abs(s.bracket_form - 0.5) <= 1e-15,
               "||Ax||^2 = " + num(s.norm_ax_squared) + ", <[J,K]x,x> = " + num(s.bracket_form));
}

void run_commutator_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const double box = cfg.get_double("box");
  const int coarse_n = cfg.get_int("coarse_n");
  const int coarse_m = cfg.get_int("coarse_m");
  const int bumps = cfg.get_int("bumps");
  const double a = cfg.get_double("a");
  const double min_order = cfg.get_double("min_order");
  BumpSampling sampling;
  sampling.min_radius = cfg.get_double("min_radius");
  sampling.max_radius = cfg.get_double("max_radius");
  sampling.box_margin = cfg.get_double("box_margin");
  sampling.min_halfwidth_fraction = cfg.get_double("min_halfwidth");
  sampling.max_halfwidth_fraction = cfg.get_double("max_halfwidth");
  if (bumps < 1) throw ConfigError("bumps: must be positive");

  report.table.header = {"n", "k", "bump", "radius", "halfwidth", "N", "M", "rel_error", "order"};
  const int threads = thread_count();
  for (int n : cfg.get_ints("dims")) {
    const Grid coarse = Grid::make(n, coarse_n, box);
    const Grid fine = Grid::make(n, 2 * coarse_n, box);
    const TimeGrid tc = TimeGrid::make(cfg.get_double("t_minus"), cfg.get_double("t_plus"), coarse_m);
    const TimeGrid tf = tc.refined();
    std::mt19937_64 rng(derived_seed(seed, static_cast<std::uint64_t>(n)));
    std::vector<BumpSpec> specs;
    for (int b = 0; b < bumps; ++b) specs.push_back(random_bump(rng, coarse, tc, sampling));

    for (double k : cfg.get_doubles("k_values")) {
      const carleman::ConjugatedOperators ops_c({WeightParams{a, k}, coarse, tc});
      const carleman::ConjugatedOperators ops_f({WeightParams{a, k}, fine, tf});
      // {discrepancy norm, explicit norm}
      const auto discrepancy = [](const carleman::ConjugatedOperators& ops, const SeparableField& v) {
        SeparableField diff = ops.apply_bracket_direct(v);
        const SeparableField exact = ops.apply_bracket_explicit(v);
        diff -= exact;
        return std::pair{diff.norm(), exact.norm()};
      };
      const auto errors = parallel_map(
          specs.size(),
          [&](std::size_t b) {
            return std::pair{discrepancy(ops_c, SeparableField::from_bump(specs[b], coarse, tc)),
                             discrepancy(ops_f, SeparableField::from_bump(specs[b], fine, tf))};
          },
          threads);

      // Pooled relative discrepancy over all bumps, summed in index order.
      double diff2_c = 0.0, exact2_c = 0.0, diff2_f = 0.0, exact2_f = 0.0;
      double worst_order = HUGE_VAL;
      bool finite = true;
      for (std::size_t b = 0; b < specs.size(); ++b) {
        const auto [pc, pf] = errors[b];
        const double ec = pc.first / pc.second;
        const double ef = pf.first / pf.second;
        const double order = std::log2(ec / ef);
        finite = finite && std::isfinite(ec) && std::isfinite(ef) && std::isfinite(order);
        worst_order = std::min(worst_order, order);
        diff2_c += pc.first * pc.first;
        exact2_c += pc.second * pc.second;
        diff2_f += pf.first * pf.first;
        exact2_f += pf.second * pf.second;
        const std::string hw = num(specs[b].time->halfwidth);
        report.table.rows.push_back({num(n), num(k), num(static_cast<int>(b)), num(specs[b].radius), hw,
                                     num(coarse_n), num(coarse_m), num(ec), ""});
        report.table.rows.push_back({num(n), num(k), num(static_cast<int>(b)), num(specs[b].radius), hw,
                                     num(2 * coarse_n), num(2 * coarse_m), num(ef), num(order)});
      }
      const double pooled_c = std::sqrt(diff2_c / exact2_c);
      const double pooled_f = std::sqrt(diff2_f / exact2_f);
      const double order = std::log2(pooled_c / pooled_f);
      const std::string tag = "n=" + num(n) + ".k=" + num(k);
      report.check("commutator." + tag + ".finite", finite && std::isfinite(order));
      report.check("commutator." + tag + ".order", order >= min_order,
                   "pooled order " + num(order) + " (required " + num(min_order) + "), worst single bump " +
                       num(worst_order));
      report.metrics.push_back({"pooled_error.coarse." + tag, pooled_c});
      report.series.push_back({"commutator_error", tag, "N", "relative L2 discrepancy", true, true,
                               {double(coarse_n), double(2 * coarse_n)}, {pooled_c, pooled_f}});
    }
  }
}

void run_weighted_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const Grid grid = Grid::make(cfg.get_int("dim"), cfg.get_int("n"), cfg.get_double("box"));
  const TimeGrid tg = TimeGrid::make(cfg.get_double("t_minus"), cfg.get_double("t_plus"), cfg.get_int("m"));
  const double k = cfg.get_double("k");
  const std::vector<double> a_values = cfg.get_doubles("a_values");
  const ExponentConvention convention =
      parse_key("convention", [&] { return parse_convention(cfg.get("convention")); });
  if (!std::is_sorted(a_values.begin(), a_values.end())) throw ConfigError("a_values: must be increasing");

  inequality::FamilyOptions opts;
  opts.superpositions = cfg.get_int("superpositions");
  opts.separable = cfg.get_int("separable");
  opts.near_caloric = cfg.get_int("near_caloric");
  const std::vector<inequality::FamilyMember> family = inequality::standard_family(grid, tg, seed, opts);
  const inequality::RatioReport r = inequality::theorem_ratio_sweep(family, a_values, k, convention);

  report.table.header = {"experiment_id", "family_id", "seed", "n", "N", "M", "T_minus", "T_plus", "a", "k",
                         "convention", "lhs", "rhs", "ratio", "log_lhs", "log_rhs", "log_ratio"};
  const std::string experiment(to_string(cfg.experiment()));
  for (const inequality::RatioRow& row : r.rows) {
    report.table.rows.push_back({experiment, row.member, std::to_string(seed), num(grid.dim()),
                                 num(row.grid_points), num(row.time_steps), num(tg.t_minus()), num(tg.t_plus()),
                                 num(row.a), num(row.k), std::string(to_string(convention)),
                                 num(row.lhs.value()), num(row.rhs.value()), num(row.ratio),
                                 log_text(row.lhs), log_text(row.rhs), num(row.lhs.log_abs - row.rhs.log_abs)});
  }
  report.check("weighted.rows", r.rows.size() == a_values.size() * family.size(),
               num(static_cast<int>(r.rows.size())) + " rows for " + num(static_cast<int>(family.size())) +
                   " members");
  report.check("weighted.no_skipped_members", r.skipped.empty());
  report.check("weighted.ratios_finite", r.all_finite());
  report.check("weighted.lhs_monotone_in_a", r.lhs_monotone_in_a());

  report.metrics.push_back({"c_emp", r.c_emp});
  for (double a : a_values) {
    double c = 0.0;
    for (const inequality::RatioRow& row : r.rows) {
      if (row.a == a) c = std::max(c, row.ratio);
    }
    report.metrics.push_back({"c_emp.a=" + num(a), c});
  }
  for (const inequality::FamilyMember& m : family) {
    Series s{"ratio_vs_a", m.id, "a", "lhs / rhs", true, true, {}, {}};
    for (const inequality::RatioRow& row : r.rows) {
      if (row.member == m.id) {
        s.x.push_back(row.a);
        s.y.push_back(row.ratio);
      }
    }
    report.series.push_back(std::move(s));
  }
}

void run_cz_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const int dim = cfg.get_int("dim");
  const double box = cfg.get_double("box");
  const Grid coarse = Grid::make(dim, cfg.get_int("coarse_n"), box);
  const Grid fine = Grid::make(dim, cfg.get_int("fine_n"), box);
  const std::vector<double> ks = cfg.get_doubles("k_values");
  const double stability = cfg.get_double("stability");
  for (double k : ks) parse_key("k_values", [&] { inequality::require_cz_exponent(k); return 0; });

  // Specs are drawn once so both levels sample the same tensors.
  const std::vector<inequality::TensorBumpSpec> specs =
      inequality::tensor_bump_specs(coarse, cfg.get_int("tensors"), seed);
  struct Ratios {
    std::vector<double> coarse;
    std::vector<double> fine;
  };
  const auto ratios = parallel_map(
      specs.size(),
      [&](std::size_t i) {
        Ratios out;
        for (const Grid* g : {&coarse, &fine}) {
          const inequality::CzDensities d = inequality::cz_densities(inequality::make_tensor(specs[i], *g));
          std::vector<double>& dst = g == &coarse ? out.coarse : out.fine;
          for (double k : ks) dst.push_back(inequality::cz_weighted(d.lhs, k) / inequality::cz_weighted(d.rhs, k));
        }
        return out;
      },
      thread_count());

  report.table.header = {"tensor", "k", "N", "ratio", "relative_change"};
  bool finite = true;
  double worst_change = 0.0;
  double worst_k0 = 0.0;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const double rc = ratios[i].coarse[j];
      const double rf = ratios[i].fine[j];
      const double change = std::abs(rf - rc) / std::abs(rf);
      finite = finite && std::isfinite(rc) && std::isfinite(rf);
      worst_change = std::max(worst_change, change);
      max_ratio = std::max({max_ratio, rc, rf});
      if (ks[j] == 0.0) worst_k0 = std::max({worst_k0, rc, rf});
      report.table.rows.push_back({num(static_cast<int>(i)), num(ks[j]), num(coarse.points_per_axis()), num(rc), ""});
      report.table.rows.push_back({num(static_cast<int>(i)), num(ks[j]), num(fine.points_per_axis()), num(rf),
                                   num(change)});
    }
    report.metrics.push_back({"cz_ratio_max.k=" + num(ks[j]), max_ratio});
  }
  for (const Grid* g : {&coarse, &fine}) {
    Series s{"cz_ratio_vs_k", "max over tensors, N=" + num(g->points_per_axis()), "k", "cz ratio", false, false,
             {}, {}};
    for (std::size_t j = 0; j < ks.size(); ++j) {
      double m = 0.0;
      for (const Ratios& r : ratios) m = std::max(m, g == &coarse ? r.coarse[j] : r.fine[j]);
      s.x.push_back(ks[j]);
      s.y.push_back(m);
    }
    report.series.push_back(std::move(s));
  }
  report.check("cz.ratios_finite", finite);
  report.check("cz.refinement_stability", worst_change <= stability,
               "max relative change " + num(worst_change) + " between N=" + num(coarse.points_per_axis()) +
                   " and N=" + num(fine.points_per_axis()));
  if (std::find(ks.begin(), ks.end(), 0.0) != ks.end()) {
    report.check("cz.unweighted_bound", worst_k0 <= 1.0 + 1e-10, "max k=0 ratio " + num(worst_k0));
  }
  bool rejected = false;
  try {
    inequality::require_cz_exponent(inequality::kCzExponentLimit);
  } catch (const DomainError&) {
    rejected = true;
  }
  report.check("cz.exponent_limit_rejected", rejected, "k = 5/2 is outside the estimate");
}

void run_ap_probe_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  inequality::ApProbeOptions opts;
  opts.dim = cfg.get_int("dim");
  opts.width = cfg.get_double("width");
  opts.box_per_radius = cfg.get_double("box_per_radius");
  opts.points_per_unit = cfg.get_double("points_per_unit");
  const double k = cfg.get_double("k");
  const std::vector<double> radii = cfg.get_doubles("radii");
  const inequality::ApProbeReport r = inequality::ap_failure_probe(k, radii, opts);

  report.table.header = {"k", "radius", "box_length", "N", "riesz_ratio", "divergence_ratio"};
  Series riesz{"ap_probe", "Riesz R_11", "plateau radius", "weighted ratio", true, true, {}, {}};
  Series div{"ap_probe", "divergence form", "plateau radius", "weighted ratio", true, true, {}, {}};
  bool finite = true;
  for (const inequality::ApProbeRow& row : r.rows) {
    report.table.rows.push_back({num(k), num(row.radius), num(row.box_length), num(row.grid_points),
                                 num(row.riesz_ratio), num(row.divergence_ratio)});
    finite = finite && std::isfinite(row.riesz_ratio);
    if (k < inequality::kCzExponentLimit) finite = finite && std::isfinite(row.divergence_ratio);
    riesz.x.push_back(row.radius);
    riesz.y.push_back(row.riesz_ratio);
    div.x.push_back(row.radius);
    div.y.push_back(row.divergence_ratio);
    report.metrics.push_back({"riesz_ratio.R=" + num(row.radius), row.riesz_ratio, MetricKind::kMatch, 1e-10});
  }
  report.series.push_back(std::move(riesz));
  if (k < inequality::kCzExponentLimit) report.series.push_back(std::move(div));
  report.check("ap_probe.ratios_finite", finite);
  report.notes.push_back(std::string("Riesz ratio ") +
                         (r.riesz_ratio_nondecreasing() ? "non-decreasing" : "not monotone") +
                         " in the plateau radius");
}

void run_shear_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const double box = 2.0 * std::numbers::pi;
  const nse::Scheme scheme = parse_key("scheme", [&] { return nse::parse_scheme(cfg.get("scheme")); });

  // Exact shear flow.
  const Grid grid = Grid::make(3, cfg.get_int("n"), box);
  nse::MildSolverConfig sc;
  sc.dt = cfg.get_double("dt");
  sc.total_time = cfg.get_double("t_end");
  sc.scheme = scheme;
  parse_key("dt", [&] { sc.validate(); return 0; });
  const nse::Trajectory shear = nse::solve(nse::shear_flow(grid, 0.0), sc);
  VectorField err = shear.final_state;
  err -= nse::shear_flow(grid, shear.final_time);
  const double shear_error = err.max_magnitude();
  const double tol = cfg.get_double("tolerance");
  check_trajectory(report, "shear", shear);
  report.check("shear.max_error", shear_error <= tol,
               "max |u - u_exact| = " + num(shear_error) + " at t = " + num(shear.final_time));
  report.extra_tables["diagnostics"] = diagnostics_table(shear.diagnostics);
  report.series.push_back(diagnostic_series(shear.diagnostics, "shear_energy", "energy",
                                            &nse::Diagnostics::energy, true));

  report.table.header = {"case", "scheme", "N", "dt", "t_end", "error", "order"};
  report.table.rows.push_back({"shear", std::string(nse::to_string(scheme)), num(grid.points_per_axis()), num(sc.dt),
                               num(shear.final_time), num(shear_error), ""});

  // Step-halving order study on random solenoidal data.
  const Grid og = Grid::make(3, cfg.get_int("order_n"), box);
  const VectorField u0 = nse::random_solenoidal_field(og, cfg.get_double("amplitude"), seed);
  std::vector<double> dts = cfg.get_doubles("order_dts");
  if (dts.size() < 2) throw ConfigError("order_dts: need at least two step sizes");
  const double refine = cfg.get_int("order_ref_refine");
  for (nse::Scheme s : {nse::Scheme::kIntegratingFactorRk2, nse::Scheme::kIntegratingFactorRk4}) {
    const std::string name(nse::to_string(s));
    nse::MildSolverConfig oc;
    oc.scheme = s;
    oc.total_time = cfg.get_double("order_t_end");
    oc.dt = *std::max_element(dts.begin(), dts.end()) / refine;
    const nse::Trajectory ref = nse::solve(u0, oc);
    check_trajectory(report, "order." + name + ".reference", ref);
    Series series{"order_study", name, "dt", "L2 error at t_end", true, true, {}, {}};
    double prev = 0.0;
    double worst = HUGE_VAL;
    for (double dt : dts) {
      oc.dt = dt;
      const nse::Trajectory tr = nse::solve(u0, oc);
      check_trajectory(report, "order." + name + ".dt=" + num(dt), tr);
      VectorField e = tr.final_state;
      e -= ref.final_state;
      const double error = l2_norm(e);
      const double order = prev > 0.0 ? std::log2(prev / error) : NAN;
      if (prev > 0.0) worst = std::min(worst, order);
      report.table.rows.push_back({"order", name, num(og.points_per_axis()), num(dt), num(tr.final_time),
                                   num(error), prev > 0.0 ? num(order) : ""});
      series.x.push_back(dt);
      series.y.push_back(error);
      prev = error;
    }
    const double required = cfg.get_double(s == nse::Scheme::kIntegratingFactorRk2 ? "min_order_rk2" : "min_order_rk4");
    report.check("order." + name, worst >= required,
                 "min observed order " + num(worst) + " (required " + num(required) + ")");
    report.series.push_back(std::move(series));
  }
}

void run_axisym_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const Grid grid = Grid::make(3, cfg.get_int("n"), cfg.get_double("box"));
  const VectorField u0 = nse::axisymmetric_no_swirl_field(grid, cfg.get_double("amplitude"), cfg.get_double("sigma"));
  nse::MildSolverConfig sc;
  sc.dt = cfg.get_double("dt");
  sc.total_time = cfg.get_double("t_end");
  sc.diagnostics.swirl = true;
  sc.diagnostics.symmetry = true;
  sc.diagnostics.symmetry_angles = cfg.get_doubles("angles");
  parse_key("dt", [&] { sc.validate(); return 0; });
  const nse::Trajectory tr = nse::solve(u0, sc);
  check_trajectory(report, "axisym", tr);

  const double swirl_tol = cfg.get_double("swirl_tolerance");
  const double factor = cfg.get_double("defect_factor");
  double max_swirl = 0.0;
  double max_defect = 0.0;
  for (const nse::Diagnostics& d : tr.diagnostics) {
    max_swirl = std::max(max_swirl, d.swirl_fraction);
    max_defect = std::max(max_defect, d.symmetry_defect);
  }
  const double defect0 = tr.diagnostics.front().symmetry_defect;
  report.check("axisym.swirl_fraction", max_swirl <= swirl_tol, "max swirl fraction " + num(max_swirl));
  report.check("axisym.symmetry_defect", max_defect <= factor * defect0,
               "max defect " + num(max_defect) + ", initial " + num(defect0));

  report.table = diagnostics_table(tr.diagnostics);
  report.series.push_back(diagnostic_series(tr.diagnostics, "axisym_swirl", "swirl_fraction",
                                            &nse::Diagnostics::swirl_fraction, false));
  report.series.push_back(diagnostic_series(tr.diagnostics, "axisym_symmetry", "symmetry_defect",
                                            &nse::Diagnostics::symmetry_defect, false));
  report.series.push_back(diagnostic_series(tr.diagnostics, "axisym_energy", "energy",
                                            &nse::Diagnostics::energy, false));
  report.blobs["nse-axisym.final.bin"] = encode_field(tr.final_state);
}

void run_separation_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const Grid grid = Grid::make(3, cfg.get_int("n"), cfg.get_double("box"));
  const double k = cfg.get_double("k");
  const VectorField base =
      nse::axisymmetric_no_swirl_field(grid, cfg.get_double("amplitude"), cfg.get_double("sigma"));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  BumpSpec bump;
  bump.radius = cfg.get_double("perturbation_radius");
  bump.amplitude = cfg.get_double("perturbation");
  for (int d = 0; d < 3; ++d) bump.center[d] = unit(rng);
  VectorField delta(grid);
  delta[0] = make_bump(bump, grid);
  const VectorField perturbed = base + spectral::leray_project(delta);

  nse::MildSolverConfig sc;
  sc.dt = cfg.get_double("dt");
  sc.total_time = cfg.get_double("t_end");
  parse_key("dt", [&] { sc.validate(); return 0; });
  const nse::SeparationReport same = nse::separation_track(base, base, sc, k);
  const nse::SeparationReport sep = nse::separation_track(base, perturbed, sc, k);
  const nse::SeparationReport swapped = nse::separation_track(perturbed, base, sc, k);

  const bool all_zero = std::all_of(same.distances.begin(), same.distances.end(), [](double d) { return d == 0.0; });
  report.check("separation.identical_data", all_zero && !same.truncated, "distance is exactly zero at every step");
  report.check("separation.completed", !sep.truncated && !swapped.truncated, sep.note);
  report.check("separation.positive", sep.final_distance > 0.0, "final distance " + num(sep.final_distance));
  report.check("separation.symmetric", sep.distances == swapped.distances);
  report.metrics.push_back({"final_distance", sep.final_distance, MetricKind::kMatch, 1e-10});

  report.table.header = {"step", "t", "distance_identical", "distance_perturbed"};
  Series s{"separation", "perturbed", "t", "weighted distance", false, true, sep.times, sep.distances};
  for (std::size_t i = 0; i < sep.times.size(); ++i) {
    report.table.rows.push_back({num(static_cast<int>(i)), num(sep.times[i]),
                                 i < same.distances.size() ? num(same.distances[i]) : "", num(sep.distances[i])});
  }
  report.series.push_back(std::move(s));
}

void run_example_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const std::uint64_t seed = cfg.require_seed();
  const double final_time = cfg.get_double("final_time");
  const nse::ScalarProfile h = parse_key("ramp", [&] {
    return nse::cubic_vanishing_profile(final_time, cfg.get_double("t_on"), cfg.get_double("ramp"));
  });
  const int count = cfg.get_int("samples");
  if (count < 1) throw ConfigError("samples: must be positive");
  const double half = 0.5 * cfg.get_double("box");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> space(-half, half);
  std::uniform_real_distribution<double> time(0.0, final_time);
  std::vector<nse::SpaceTimePoint> samples(static_cast<std::size_t>(count));
  for (nse::SpaceTimePoint& p : samples) {
    for (int d = 0; d < 3; ++d) p.x[d] = space(rng);
    p.t = time(rng);
  }
  samples.back().t = final_time;

  const double tol = cfg.get_double("tolerance");
  const nse::Example13Report exact = nse::example_1_3_residual(h, samples);
  const nse::Example13Report wrong = nse::example_1_3_residual(h, samples, 1.01);
  report.check("example.residual", exact.max_residual <= tol, "max residual " + num(exact.max_residual));
  report.check("example.vanishes_at_final_time", exact.vanishes_at_final_time);
  report.check("example.nontrivial_before", exact.nontrivial_before);
  report.check("example.wrong_pressure_detected", wrong.max_residual > tol,
               "pressure scaled by 1.01 leaves residual " + num(wrong.max_residual));
  report.metrics.push_back({"wrong_pressure_residual", wrong.max_residual, MetricKind::kMatch, 1e-10});

  report.table.header = {"case", "pressure_scale", "samples", "max_residual", "max_abs_derivative"};
  report.table.rows.push_back({"exact", num(1.0), num(exact.samples), num(exact.max_residual),
                               num(exact.max_abs_derivative)});
  report.table.rows.push_back({"perturbed", num(1.01), num(wrong.samples), num(wrong.max_residual),
                               num(wrong.max_abs_derivative)});
  Series s{"example_profile", "h(t)", "t", "h", false, false, {}, {}};
  for (int i = 0; i <= 100; ++i) {
    const double t = final_time * i / 100.0;
    s.x.push_back(t);
    s.y.push_back(h.value(t));
  }
  report.series.push_back(std::move(s));
}

void run_cutoff_suite(ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  const Grid grid = Grid::make(cfg.get_int("dim"), cfg.get_int("n"), cfg.get_double("box"));
  const TimeGrid tg = TimeGrid::make(cfg.get_double("t_minus"), cfg.get_double("t_plus"), cfg.get_int("m"));
  TemporalBump phi;
  phi.center = 0.5 * (tg.t_minus() + tg.t_plus());
  phi.halfwidth = 0.45 * (tg.t_plus() - tg.t_minus());
  const SpaceTimeField u = inequality::spatially_constant_field(grid, tg, phi);
  const WeightParams params{cfg.get_double("a"), cfg.get_double("k")};
  const std::vector<double> ms = cfg.get_doubles("m_values");
  const inequality::CutoffReport r = inequality::cutoff_convergence_study(u, ms, params);

  report.table.header = {"m", "lhs", "rhs", "log_lhs", "log_rhs"};
  Series lhs{"cutoff", "lhs", "m", "value", true, true, {}, {}};
  Series rhs{"cutoff", "rhs", "m", "value", true, true, {}, {}};
  for (const inequality::CutoffRow& row : r.rows) {
    report.table.rows.push_back({num(row.m), num(row.lhs.value()), num(row.rhs.value()), log_text(row.lhs),
                                 log_text(row.rhs)});
    lhs.x.push_back(row.m);
    lhs.y.push_back(row.lhs.value());
    rhs.x.push_back(row.m);
    rhs.y.push_back(row.rhs.value());
  }
  report.series.push_back(std::move(lhs));
  report.series.push_back(std::move(rhs));
  const double tol = cfg.get_double("tolerance");
  report.check("cutoff.converged", r.converged(tol),
               "last relative changes lhs " + num(r.lhs_change) + ", rhs " + num(r.rhs_change));
}

}  // namespace bulab::experiments
