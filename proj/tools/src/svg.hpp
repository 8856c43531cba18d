// SPDX-License-Identifier: Apache-2.0
//
// hmimo - electromagnetic-domain LOS channel models for holographic MIMO surfaces
// Copyright (C) 2026 The hmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HMIMO_TOOLS_SVG_HPP
#define HMIMO_TOOLS_SVG_HPP

#include <string>
#include <vector>

namespace hmimo::tools
{

struct PlotSeries
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    int color = 0; // palette index
    int dash = 0;  // 0 solid, 1 dashed, 2 dotted
};

struct PlotSpec
{
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = true;
};

// Static line plot; points that cannot be drawn on the chosen axes
// (non-finite, or non-positive on a log axis) are skipped.
std::string line_plot_svg(const PlotSpec &spec, const std::vector<PlotSeries> &series);

} // namespace hmimo::tools

#endif
