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

#include "bulab/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bulab/field/field_io.hpp"

namespace bulab::experiments {
namespace {

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {ExperimentKind::kVerifyMatrixLemma, "verify-matrix-lemma"},
    {ExperimentKind::kVerifyCommutator, "verify-commutator"},
    {ExperimentKind::kVerifyWeighted, "verify-weighted"},
    {ExperimentKind::kVerifyCz, "verify-cz"},
    {ExperimentKind::kApProbe, "ap-probe"},
    {ExperimentKind::kNseShear, "nse-shear"},
    {ExperimentKind::kNseAxisym, "nse-axisym"},
    {ExperimentKind::kNseSeparation, "nse-separation"},
    {ExperimentKind::kExample13, "example-1-3"},
    {ExperimentKind::kCutoffStudy, "cutoff-study"},
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': '" + text + "' is not a number");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': '" + text + "' is not an integer");
  }
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': '" + text + "' is not an unsigned 64-bit integer");
  }
  return v;
}

using Schema = std::vector<ParamSpec>;

const Schema kMatrixLemma = {
    {"matrices", "1000", "random matrices per shape class"},
    {"vectors", "100", "random vectors per matrix"},
    {"min_dim", "2", "smallest matrix dimension"},
    {"max_dim", "16", "largest matrix dimension"},
};

const Schema kCommutator = {
    {"dims", "2,3", "spatial dimensions"},
    {"k_values", "0,1,2", "decay exponents"},
    {"a", "10", "Carleman parameter"},
    {"bumps", "20", "random space-time bumps per (n, k)"},
    {"box", "6", "box side length"},
    {"coarse_n", "48", "points per axis, coarse level"},
    {"coarse_m", "64", "time steps, coarse level"},
    {"t_minus", "0.02", "start of the time window"},
    {"t_plus", "0.1", "end of the time window"},
    {"min_radius", "2.2", "smallest bump radius"},
    {"max_radius", "2.5", "largest bump radius"},
    {"box_margin", "0.1", "gap between bump support and box edge"},
    {"min_halfwidth", "0.42", "smallest temporal halfwidth, fraction of the window"},
    {"max_halfwidth", "0.48", "largest temporal halfwidth, fraction of the window"},
    {"min_order", "1.9", "required refinement order per bump"},
};

const Schema kWeighted = {
    {"dim", "3", "spatial dimension"},
    {"n", "48", "points per axis"},
    {"m", "64", "time steps"},
    {"box", "8", "box side length"},
    {"t_minus", "0.02", "start of the time window"},
    {"t_plus", "0.1", "end of the time window"},
    {"k", "2", "decay exponent"},
    {"a_values", "10,100,1000,10000", "Carleman parameters"},
    {"convention", "single_k", "single_k or double_k"},
    {"superpositions", "10", "random bump superpositions"},
    {"separable", "3", "separable members"},
    {"near_caloric", "1", "near-caloric members"},
};

const Schema kCz = {
    {"dim", "3", "spatial dimension"},
    {"box", "8", "box side length"},
    {"coarse_n", "48", "points per axis, coarse level"},
    {"fine_n", "96", "points per axis, fine level"},
    {"k_values", "0,1,2,2.4", "decay exponents"},
    {"tensors", "5", "random tensor bumps"},
    {"stability", "0.1", "allowed relative change between levels"},
};

const Schema kApProbe = {
    {"dim", "3", "spatial dimension"},
    {"k", "2", "decay exponent"},
    {"radii", "2,4,8", "plateau radii"},
    {"width", "1", "plateau edge width"},
    {"box_per_radius", "4", "box side over radius"},
    {"points_per_unit", "4", "lattice points per unit length"},
};

const Schema kShear = {
    {"n", "32", "points per axis"},
    {"dt", "0.001", "time step"},
    {"t_end", "1", "final time"},
    {"scheme", "if_rk4", "if_rk2 or if_rk4"},
    {"tolerance", "1e-6", "allowed max error against the exact flow"},
    {"order_n", "16", "points per axis for the order study"},
    {"order_t_end", "0.2", "final time for the order study"},
    {"order_dts", "0.02,0.01,0.005", "step sizes for the order study"},
    {"order_ref_refine", "16", "reference step is the largest step over this factor"},
    {"amplitude", "2", "max |u| of the random order-study data"},
    {"min_order_rk2", "1.9", "required RK2 order"},
    {"min_order_rk4", "3.7", "required RK4 order"},
};

const Schema kAxisym = {
    {"n", "48", "points per axis"},
    {"box", "12.566370614359172", "box side length"},
    {"amplitude", "1", "vector potential amplitude"},
    {"sigma", "1", "vector potential width"},
    {"dt", "0.01", "time step"},
    {"t_end", "0.5", "final time"},
    {"angles", "0.5,1,2", "rotation angles for the symmetry defect"},
    {"swirl_tolerance", "1e-4", "allowed swirl fraction"},
    {"defect_factor", "5", "allowed growth of the symmetry defect"},
};

const Schema kSeparation = {
    {"n", "32", "points per axis"},
    {"box", "12.566370614359172", "box side length"},
    {"dt", "0.01", "time step"},
    {"t_end", "0.5", "final time"},
    {"k", "2", "decay exponent of the distance weight"},
    {"amplitude", "1", "base flow vector potential amplitude"},
    {"sigma", "1", "base flow vector potential width"},
    {"perturbation", "0.1", "perturbation amplitude"},
    {"perturbation_radius", "1.5", "perturbation bump radius"},
};

const Schema kExample = {
    {"final_time", "1", "vanishing time T"},
    {"samples", "10000", "sampled (x, t) points"},
    {"t_on", "0", "start of the smooth switch-on"},
    {"ramp", "0.25", "switch-on length"},
    {"box", "4", "spatial sampling cube side"},
    {"tolerance", "1e-12", "allowed residual"},
};

const Schema kCutoff = {
    {"dim", "2", "spatial dimension"},
    {"n", "512", "points per axis"},
    {"box", "80", "box side length"},
    {"m", "32", "time steps"},
    {"t_minus", "0.02", "start of the time window"},
    {"t_plus", "0.1", "end of the time window"},
    {"a", "10", "Carleman parameter"},
    {"k", "2", "decay exponent"},
    {"m_values", "1,2,4,8,16", "cutoff scales"},
    {"tolerance", "0.02", "allowed relative change between the last two scales"},
};

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& kn : kNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

ExperimentKind parse_experiment(std::string_view name) {
  for (const auto& kn : kNames) {
    if (kn.name == name) return kn.kind;
  }
  throw ConfigError("key 'experiment': unknown experiment '" + std::string(name) + "'");
}

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> kInfo = {
      {ExperimentKind::kVerifyMatrixLemma, "commutator inequality for random matrices", true},
      {ExperimentKind::kVerifyCommutator, "direct vs closed-form [J,K] under refinement", true},
      {ExperimentKind::kVerifyWeighted, "space-time weighted estimate, ratio sweep in a", true},
      {ExperimentKind::kVerifyCz, "weighted CZ estimate on tensor bumps", true},
      {ExperimentKind::kApProbe, "zeroth-order Riesz ratio on growing plateaus", false},
      {ExperimentKind::kNseShear, "exact shear flow and time-step order study", true},
      {ExperimentKind::kNseAxisym, "axisymmetric no-swirl flow: swirl and symmetry defect", false},
      {ExperimentKind::kNseSeparation, "weighted distance of two co-evolved solutions", true},
      {ExperimentKind::kExample13, "pointwise residual of the vanishing constant flow", true},
      {ExperimentKind::kCutoffStudy, "cutoff approximation of a non-compact field", false},
  };
  return kInfo;
}

const std::vector<ParamSpec>& parameter_schema(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kVerifyMatrixLemma: return kMatrixLemma;
    case ExperimentKind::kVerifyCommutator: return kCommutator;
    case ExperimentKind::kVerifyWeighted: return kWeighted;
    case ExperimentKind::kVerifyCz: return kCz;
    case ExperimentKind::kApProbe: return kApProbe;
    case ExperimentKind::kNseShear: return kShear;
    case ExperimentKind::kNseAxisym: return kAxisym;
    case ExperimentKind::kNseSeparation: return kSeparation;
    case ExperimentKind::kExample13: return kExample;
    case ExperimentKind::kCutoffStudy: return kCutoff;
  }
  throw ConfigError("unknown experiment");
}

ExperimentConfig::ExperimentConfig(ExperimentKind kind) : kind_(kind) {
  for (const ParamSpec& p : parameter_schema(kind)) values_[p.key] = p.default_value;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) { return ExperimentConfig(kind); }

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    for (const auto& [k, v] : entries) {
      if (k == key) throw ConfigError("key '" + key + "' given twice");
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  const auto exp = std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.first == "experiment"; });
  if (exp == entries.end()) throw ConfigError("key 'experiment' is required");
  ExperimentConfig cfg(parse_experiment(exp->second));
  for (const auto& [key, value] : entries) {
    if (key == "experiment") continue;
    if (key == "seed") {
      if (value != "none") cfg.seed_ = to_u64(key, value);
      continue;
    }
    cfg.set(key, value);
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::uint64_t ExperimentConfig::require_seed() const {
  if (!seed_) {
    throw ConfigError("key 'seed': experiment '" + std::string(to_string(kind_)) +
                      "' draws random data and needs an explicit seed");
  }
  return *seed_;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    throw ConfigError("key '" + key + "' is not a parameter of experiment '" + std::string(to_string(kind_)) + "'");
  }
  if (value.empty()) throw ConfigError("key '" + key + "' has an empty value");
  it->second = value;
}

const std::string& ExperimentConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("key '" + key + "' is not defined");
  return it->second;
}

double ExperimentConfig::get_double(const std::string& key) const { return to_double(key, get(key)); }
int ExperimentConfig::get_int(const std::string& key) const { return to_int(key, get(key)); }

std::vector<double> ExperimentConfig::get_doubles(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& item : split_list(get(key))) out.push_back(to_double(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "' needs at least one value");
  return out;
}

std::vector<int> ExperimentConfig::get_ints(const std::string& key) const {
  std::vector<int> out;
  for (const std::string& item : split_list(get(key))) out.push_back(to_int(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "' needs at least one value");
  return out;
}

std::string ExperimentConfig::canonical_text() const {
  std::string out = "experiment = " + std::string(to_string(kind_)) + "\n";
  out += "seed = " + (seed_ ? std::to_string(*seed_) : std::string("none")) + "\n";
  for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
  return out;
}

std::string ExperimentConfig::fingerprint() const {
  const std::string text = canonical_text();
  return content_hash(std::vector<std::uint8_t>(text.begin(), text.end()));
}

int thread_count() {
  const char* env = std::getenv(kThreadsEnv);
  if (env == nullptr || *env == '\0') return 1;
  const int n = to_int(kThreadsEnv, env);
  if (n < 1) throw ConfigError(std::string(kThreadsEnv) + " must be a positive integer");
  return n;
}

}  // namespace bulab::experiments
