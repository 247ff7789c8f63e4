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

#include <filesystem>
#include <string>
#include <vector>

#include "bulab/experiments/report.hpp"

namespace bulab::experiments {

/// Static SVG line plot of series that share one `plot` name. Non-positive
/// values are dropped on log axes.
std::string render_svg(const std::vector<Series>& series);

struct PlotResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> notes;  ///< skipped plots and why
};

/// One SVG per plot name; plots whose series have fewer than two usable
/// points are skipped with a note.
PlotResult write_plots(const std::vector<Series>& series, const std::filesystem::path& dir);

}  // namespace bulab::experiments
