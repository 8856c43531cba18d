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

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>


namespace hmimo::tools
{

namespace
{

constexpr double width = 760.0;
constexpr double height = 480.0;
constexpr double left = 80.0;
constexpr double right = 200.0;
constexpr double top = 40.0;
constexpr double bottom = 60.0;

constexpr std::array<const char *, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                               "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

std::string tick_label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct Axis
{
    bool log = false;
    double lo = 0.0;
    double hi = 1.0;

    bool drawable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
    double t(double v) const { return log ? std::log10(v) : v; }
    double frac(double v) const { return hi > lo ? (t(v) - lo) / (hi - lo) : 0.5; }

    void fit(const std::vector<double> &values)
    {
        double a = std::numeric_limits<double>::infinity(), b = -a;
        for (double v : values)
            if (drawable(v))
            {
                a = std::min(a, t(v));
                b = std::max(b, t(v));
            }
        if (!std::isfinite(a))
        {
            a = 0.0;
            b = 1.0;
        }
        if (log)
        {
            a = std::floor(a);
            b = std::max(std::ceil(b), a + 1.0);
        }
        else if (b - a <= 0.0)
        {
            a -= 0.5;
            b += 0.5;
        }
        lo = a;
        hi = b;
    }

    std::vector<double> ticks() const
    {
        std::vector<double> out;
        if (log)
        {
            const int step = std::max(1, static_cast<int>(std::ceil((hi - lo) / 10.0)));
            for (double e = lo; e <= hi + 1e-9; e += step)
                out.push_back(std::pow(10.0, e));
        }
        else
            for (int i = 0; i <= 5; ++i)
                out.push_back(lo + (hi - lo) * i / 5.0);
        return out;
    }
};

} // namespace

std::string line_plot_svg(const PlotSpec &spec, const std::vector<PlotSeries> &series)
{
    Axis ax{spec.log_x}, ay{spec.log_y};
    std::vector<double> xs, ys;
    for (const auto &s : series)
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
            if (ax.drawable(s.x[i]) && ay.drawable(s.y[i]))
            {
                xs.push_back(s.x[i]);
                ys.push_back(s.y[i]);
            }
    ax.fit(xs);
    ay.fit(ys);

    const double pw = width - left - right, ph = height - top - bottom;
    const auto px = [&](double x) { return left + ax.frac(x) * pw; };
    const auto py = [&](double y) { return top + (1.0 - ay.frac(y)) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(spec.title) << "</text>\n";

    for (double t : ax.ticks())
    {
        const double x = px(t);
        o << "<line x1=\"" << num(x) << "\" y1=\"" << num(top) << "\" x2=\"" << num(x) << "\" y2=\""
          << num(top + ph) << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << num(x) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">"
          << tick_label(t) << "</text>\n";
    }
    for (double t : ay.ticks())
    {
        const double y = py(t);
        o << "<line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left + pw) << "\" y2=\""
          << num(y) << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << num(left - 6) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << tick_label(t)
          << "</text>\n";
    }
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 16) << "\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
    o << "<text transform=\"translate(20," << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(spec.y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k)
    {
        const auto &s = series[k];
        const char *color = palette[static_cast<std::size_t>(s.color) % palette.size()];
        const char *dash = s.dash == 1 ? " stroke-dasharray=\"6,4\"" : s.dash == 2 ? " stroke-dasharray=\"2,3\"" : "";
        std::string path;
        bool pen_down = false;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
        {
            if (!ax.drawable(s.x[i]) || !ay.drawable(s.y[i]))
            {
                pen_down = false;
                continue;
            }
            path += (pen_down ? " L" : " M") + num(px(s.x[i])) + "," + num(py(s.y[i]));
            pen_down = true;
            o << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2.5\" fill=\""
              << color << "\"/>\n";
        }
        if (!path.empty())
            o << "<path d=\"" << path.substr(1) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
              << dash << "/>\n";

        const double ly = top + 14.0 + 18.0 * static_cast<double>(k);
        const double lx = left + pw + 14.0;
        o << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\"" << num(ly)
          << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash << "/>\n";
        o << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace hmimo::tools
