// Copyright 2026 The rgc-tradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "rgc/csv.hpp"

// Self-contained SVG 1.1 emitter for tradeoff curves: axes with numeric tick
// labels, one polyline per series, legend. All coordinates go through exact
// decimal rendering, so identical input is rendered byte-identically.

namespace rgc {

namespace detail {

inline const char* series_color(const std::string& kind, std::size_t index) {
    if (kind == "functional") return "#1f77b4";
    if (kind == "exact") return "#d62728";
    if (kind == "sharing") return "#2ca02c";
    static const char* palette[] = {"#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return palette[index % 4];
}

inline std::string svg_num(const Rational& v) { return to_decimal_string(v, 3); }

}  // namespace detail

inline std::string render_svg(const std::vector<PlotSeries>& series) {
    const Rational width(800), height(600);
    const Rational margin_left(80), margin_right(170), margin_top(40), margin_bottom(70);
    const Rational plot_w = width - margin_left - margin_right;
    const Rational plot_h = height - margin_top - margin_bottom;

    bool has_points = false;
    Rational min_x, max_x, min_y, max_y;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!has_points) {
                min_x = max_x = x;
                min_y = max_y = y;
                has_points = true;
            } else {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    }
    if (!has_points) {
        min_x = min_y = 0;
        max_x = max_y = 1;
    }
    Rational span_x = max_x - min_x, span_y = max_y - min_y;
    Rational pad_x = span_x == 0 ? Rational(1, 2) : Rational(span_x / 20);
    Rational pad_y = span_y == 0 ? Rational(1, 2) : Rational(span_y / 20);
    min_x -= pad_x;
    max_x += pad_x;
    min_y -= pad_y;
    max_y += pad_y;
    span_x = max_x - min_x;
    span_y = max_y - min_y;

    auto sx = [&](const Rational& x) { return margin_left + (x - min_x) / span_x * plot_w; };
    auto sy = [&](const Rational& y) {
        return height - margin_bottom - (y - min_y) / span_y * plot_h;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // frame
    out << "<rect x=\"" << detail::svg_num(margin_left) << "\" y=\""
        << detail::svg_num(margin_top) << "\" width=\"" << detail::svg_num(plot_w)
        << "\" height=\"" << detail::svg_num(plot_h)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const int ticks = 6;
    for (int i = 0; i < ticks; ++i) {
        Rational fx = min_x + span_x * i / (ticks - 1);
        Rational px = sx(fx);
        out << "<line x1=\"" << detail::svg_num(px) << "\" y1=\""
            << detail::svg_num(height - margin_bottom) << "\" x2=\"" << detail::svg_num(px)
            << "\" y2=\"" << detail::svg_num(height - margin_bottom + 6)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << detail::svg_num(px) << "\" y=\""
            << detail::svg_num(height - margin_bottom + 22)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
            << to_decimal_string(fx, 4) << "</text>\n";

        Rational fy = min_y + span_y * i / (ticks - 1);
        Rational py = sy(fy);
        out << "<line x1=\"" << detail::svg_num(margin_left - 6) << "\" y1=\""
            << detail::svg_num(py) << "\" x2=\"" << detail::svg_num(margin_left) << "\" y2=\""
            << detail::svg_num(py) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << detail::svg_num(margin_left - 10) << "\" y=\""
            << detail::svg_num(py + 4)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
            << to_decimal_string(fy, 4) << "</text>\n";
    }
    out << "<text x=\"" << detail::svg_num(margin_left + plot_w / 2) << "\" y=\""
        << detail::svg_num(height - 20)
        << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">storage "
           "overhead n*alpha/B</text>\n";
    out << "<text x=\"22\" y=\"" << detail::svg_num(margin_top + plot_h / 2)
        << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 22 "
        << detail::svg_num(margin_top + plot_h / 2)
        << ")\">repair bandwidth n*d*beta/B</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].points.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << detail::series_color(series[i].kind, i)
            << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[i].points) {
            if (!first) out << " ";
            out << detail::svg_num(sx(x)) << "," << detail::svg_num(sy(y));
            first = false;
        }
        out << "\"/>\n";
    }

    // legend
    Rational lx = width - margin_right + 15;
    for (std::size_t i = 0; i < series.size(); ++i) {
        Rational ly = margin_top + 20 + Rational(static_cast<long long>(i)) * 22;
        out << "<line x1=\"" << detail::svg_num(lx) << "\" y1=\"" << detail::svg_num(ly)
            << "\" x2=\"" << detail::svg_num(lx + 26) << "\" y2=\"" << detail::svg_num(ly)
            << "\" stroke=\"" << detail::series_color(series[i].kind, i)
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << detail::svg_num(lx + 32) << "\" y=\"" << detail::svg_num(ly + 4)
            << "\" font-family=\"monospace\" font-size=\"13\">" << series[i].kind
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace rgc
