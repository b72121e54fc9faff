// Copyright 2026 The qfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFID_SVG_PLOT_H
#define QFID_SVG_PLOT_H

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qfid/sweep.h"

namespace qfid {

/// The table cannot be drawn as requested (too few points, ragged grid, ...).
struct PlotError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Stroke color used for a channel: red, blue and green for amplitude
/// damping, phase damping and depolarizing.
std::string_view channel_color(ChannelKind kind);

/// Mean QFI against alpha, one <polyline> per channel present in the table.
/// Each channel needs a single p value and at least 2 alpha samples.
std::string render_line_plot(std::span<const ResultRow> rows);

/// One alpha (horizontal) by p (vertical) panel per channel, one <rect> per
/// grid cell, colored on a shared viridis-like ramp with min/max annotated.
/// Every channel must cover the full alpha x p grid; missing cells are listed
/// in the PlotError message.
std::string render_heatmap(std::span<const ResultRow> rows);

}  // namespace qfid

#endif
