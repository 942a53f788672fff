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

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/sweep.hpp"

namespace rgc {

inline constexpr const char* kSweepCsvHeader =
    "alpha,d_beta,alpha_bar,gamma_bar,kind,alpha_exact,d_beta_exact";
inline constexpr unsigned kCsvDecimalDigits = 9;

inline std::string curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::Functional: return "functional";
        case CurveKind::ExactOuter: return "exact";
        case CurveKind::SpaceSharing: return "sharing";
    }
    return "?";
}

// Decimal columns are for plotting; the *_exact columns carry the same
// values as num/den strings so equality checks stay exact.
inline std::string to_sweep_csv(const std::vector<CurvePoint>& points,
                                const CodeParams& params) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const CurvePoint& pt : points) {
        Rational d_beta = Rational(params.d) * pt.point.beta;
        out << to_decimal_string(pt.point.alpha, kCsvDecimalDigits) << ","
            << to_decimal_string(d_beta, kCsvDecimalDigits) << ","
            << to_decimal_string(pt.normalized.alpha_bar, kCsvDecimalDigits) << ","
            << to_decimal_string(pt.normalized.gamma_bar, kCsvDecimalDigits) << ","
            << curve_kind_name(pt.kind) << "," << to_fraction_string(pt.point.alpha) << ","
            << to_fraction_string(d_beta) << "\n";
    }
    return out.str();
}

struct CsvError : std::runtime_error {
    long long line;
    CsvError(long long line_number, const std::string& message)
        : std::runtime_error("csv line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

// One plotted series per kind value, in first-appearance order.
struct PlotSeries {
    std::string kind;
    std::vector<std::pair<Rational, Rational>> points;  // (alpha_bar, gamma_bar)
};

inline std::vector<PlotSeries> parse_sweep_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long line_number = 0;
    std::vector<PlotSeries> series;

    if (!std::getline(in, line)) throw CsvError(1, "empty input, expected header");
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSweepCsvHeader)
        throw CsvError(1, "bad header, expected '" + std::string(kSweepCsvHeader) + "'");

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw CsvError(line_number, "expected 7 fields");
        auto alpha_bar = parse_rational(fields[2]);
        auto gamma_bar = parse_rational(fields[3]);
        if (!alpha_bar) throw CsvError(line_number, "bad alpha_bar value");
        if (!gamma_bar) throw CsvError(line_number, "bad gamma_bar value");
        const std::string& kind = fields[4];
        if (kind.empty()) throw CsvError(line_number, "empty kind");
        PlotSeries* target = nullptr;
        for (PlotSeries& s : series)
            if (s.kind == kind) target = &s;
        if (!target) {
            series.push_back(PlotSeries{kind, {}});
            target = &series.back();
        }
        target->points.emplace_back(*alpha_bar, *gamma_bar);
    }
    return series;
}

}  // namespace rgc
