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

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace bulab {

/// A real number stored as sign * exp(log_abs), for weights like
/// h(t)^{-(2a+1)} that leave the double range when a is large.
struct LogScalar {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogScalar zero() noexcept { return {}; }
  static LogScalar from_value(double v) noexcept {
    if (v == 0.0) return {};
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  }
  static LogScalar from_log(double log_abs, int sign = 1) noexcept { return {log_abs, sign}; }

  bool is_zero() const noexcept { return sign == 0; }
  /// May overflow to +-inf.
  double value() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Sign-aware log-sum-exp accumulator with a fixed summation order.
class LogAccumulator {
 public:
  void add(LogScalar term) noexcept;
  void add_log(double log_abs, int sign) noexcept { add(LogScalar{log_abs, sign}); }
  LogScalar result() const noexcept;

 private:
  // Running log-sums of the positive and negative parts.
  double pos_ = -std::numeric_limits<double>::infinity();
  double neg_ = -std::numeric_limits<double>::infinity();
};

/// exp(a.log_abs - b.log_abs) with signs; b must be nonzero.
double log_ratio(LogScalar a, LogScalar b) noexcept;

inline void LogAccumulator::add(LogScalar term) noexcept {
  if (term.sign == 0) return;
  double& slot = term.sign > 0 ? pos_ : neg_;
  if (slot == -std::numeric_limits<double>::infinity()) {
    slot = term.log_abs;
  } else {
    const double hi = std::max(slot, term.log_abs);
    const double lo = std::min(slot, term.log_abs);
    slot = hi + std::log1p(std::exp(lo - hi));
  }
}

inline LogScalar LogAccumulator::result() const noexcept {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (neg_ == kNegInf) return pos_ == kNegInf ? LogScalar{} : LogScalar{pos_, 1};
  if (pos_ == kNegInf) return LogScalar{neg_, -1};
  if (pos_ == neg_) return LogScalar{};
  if (pos_ > neg_) return LogScalar{pos_ + std::log1p(-std::exp(neg_ - pos_)), 1};
  return LogScalar{neg_ + std::log1p(-std::exp(pos_ - neg_)), -1};
}

inline double log_ratio(LogScalar a, LogScalar b) noexcept {
  if (a.sign == 0) return 0.0;
  return a.sign * b.sign * std::exp(a.log_abs - b.log_abs);
}

}  // namespace bulab
