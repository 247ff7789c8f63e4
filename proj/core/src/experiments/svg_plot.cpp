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

#include "bulab/experiments/svg_plot.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

namespace bulab::experiments {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  bool log = false;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
  double map(double v) const { return log ? std::log10(v) : v; }
  void include(double v) {
    if (!usable(v)) return;
    lo = std::min(lo, map(v));
    hi = std::max(hi, map(v));
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  double unit(double v) const { return (map(v) - lo) / (hi - lo); }
  double tick_value(double s) const {
    const double m = lo + s * (hi - lo);
    return log ? std::pow(10.0, m) : m;
  }
};

std::size_t usable_points(const Series& s) {
  const Axis ax{s.log_x};
  const Axis ay{s.log_y};
  std::size_t n = 0;
  for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
    if (ax.usable(s.x[i]) && ay.usable(s.y[i])) ++n;
  }
  return n;
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series) {
  if (series.empty()) return {};
  Axis ax{series.front().log_x};
  Axis ay{series.front().log_y};
  for (const Series& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (ax.usable(s.x[i]) && ay.usable(s.y[i])) {
        ax.include(s.x[i]);
        ay.include(s.y[i]);
      }
    }
  }
  ax.pad();
  ay.pad();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double v) { return kLeft + ax.unit(v) * pw; };
  const auto py = [&](double v) { return kTop + (1.0 - ay.unit(v)) * ph; };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
                    fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kLeft) + "\" y=\"24\" font-size=\"14\">" + escape(series.front().plot) + "</text>\n";
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double s = t / 4.0;
    const double x = kLeft + s * pw;
    const double y = kTop + (1.0 - s) * ph;
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
           fmt(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kTop + ph + 18) + "\" text-anchor=\"middle\">" +
           fmt(ax.tick_value(s)) + "</text>\n";
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) + "\" y2=\"" + fmt(y) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) + "\" text-anchor=\"end\">" +
           fmt(ay.tick_value(s)) + "</text>\n";
  }
  svg += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 15) + "\" text-anchor=\"middle\">" +
         escape(series.front().x_label) + (ax.log ? " (log)" : "") + "</text>\n";
  svg += "<text transform=\"translate(18," + fmt(kTop + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
         escape(series.front().y_label) + (ay.log ? " (log)" : "") + "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kColors[k % std::size(kColors)];
    std::string points;
    std::string markers;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      const std::string x = fmt(px(s.x[i]));
      const std::string y = fmt(py(s.y[i]));
      points += x + "," + y + " ";
      markers += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"" + points + "\"/>\n";
    svg += markers;
    const double ly = kTop + 10 + 16.0 * k;
    svg += "<rect x=\"" + fmt(kWidth - kRight + 12) + "\" y=\"" + fmt(ly - 8) + "\" width=\"10\" height=\"10\" fill=\"" +
           color + "\"/>\n";
    svg += "<text x=\"" + fmt(kWidth - kRight + 28) + "\" y=\"" + fmt(ly + 1) + "\">" + escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

PlotResult write_plots(const std::vector<Series>& series, const std::filesystem::path& dir) {
  std::map<std::string, std::vector<Series>> by_plot;
  for (const Series& s : series) by_plot[s.plot].push_back(s);
  PlotResult result;
  if (by_plot.empty()) {
    result.notes.push_back("report has no series; no plot written");
    return result;
  }
  for (auto& [name, group] : by_plot) {
    std::vector<Series> usable;
    for (Series& s : group) {
      if (usable_points(s) >= 2) usable.push_back(std::move(s));
    }
    if (usable.empty()) {
      result.notes.push_back("plot '" + name + "' skipped: fewer than two usable points");
      continue;
    }
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / (sanitize(name) + ".svg");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render_svg(usable);
    result.files.push_back(path);
  }
  return result;
}

}  // namespace bulab::experiments
