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

#include <stdexcept>
#include <string>

#include "rgc/rational.hpp"

namespace rgc {

// An (n, k, d) regenerating-code parameter triple: any k of the n nodes
// reconstruct the file, any d nodes repair a failed one.
struct CodeParams {
    long long n = 0;
    long long k = 0;
    long long d = 0;

    void validate() const {
        if (k < 1) throw std::domain_error("invalid parameters: require k >= 1");
        if (d < k) throw std::domain_error("invalid parameters: require k <= d");
        if (n < d + 1) throw std::domain_error("invalid parameters: require d <= n-1");
    }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// Per-node storage alpha and per-helper repair transfer beta, in symbols.
struct OperatingPoint {
    Rational alpha;
    Rational beta;

    friend bool operator==(const OperatingPoint&, const OperatingPoint&) = default;
};

// The (p, theta) coordinates of the tradeoff segment containing alpha:
//   alpha = (d - p + 1) * beta - theta,  p in {1..k},  theta in [0, beta).
// p = 1, theta = 0 is the MBR point; p = k, theta = 0 is the MSR point.
// Points with p = k and theta > 0 (storage below the MSR level at this beta)
// decompose uniquely as well; no Theorem-regime improvement applies there.
struct RegimeCoordinates {
    long long p = 0;
    Rational theta;

    friend bool operator==(const RegimeCoordinates&, const RegimeCoordinates&) = default;
};

inline std::string interval_description(const CodeParams& params, const Rational& beta) {
    return "(" + to_fraction_string(Rational(params.d - params.k) * beta) + ", " +
           to_fraction_string(Rational(params.d) * beta) + "]";
}

// alpha beyond d*beta is never useful: every bound caps node contributions at
// d*beta. Returns the clamped point and whether clamping applied.
inline std::pair<OperatingPoint, bool> clamp_to_mbr(const CodeParams& params,
                                                    const OperatingPoint& pt) {
    Rational mbr_alpha = Rational(params.d) * pt.beta;
    if (pt.alpha > mbr_alpha) return {OperatingPoint{mbr_alpha, pt.beta}, true};
    return {pt, false};
}

inline void validate_point(const CodeParams& params, const OperatingPoint& pt) {
    params.validate();
    if (pt.beta <= 0) throw std::domain_error("invalid operating point: require beta > 0");
    if (pt.alpha <= Rational(params.d - params.k) * pt.beta)
        throw std::domain_error("alpha out of range: require alpha in " +
                                interval_description(params, pt.beta) +
                                " (at or below (d-k)*beta no positive file size fits)");
}

// Inverts alpha = (d - p + 1) * beta - theta. Requires
// (d-k)*beta < alpha <= d*beta; errors name the valid interval.
inline RegimeCoordinates to_regime(const CodeParams& params, const OperatingPoint& pt) {
    validate_point(params, pt);
    if (pt.alpha > Rational(params.d) * pt.beta)
        throw std::domain_error("alpha out of range: require alpha in " +
                                interval_description(params, pt.beta) +
                                " (clamp to the MBR value d*beta first)");
    Rational span = Rational(params.d + 1) * pt.beta - pt.alpha;  // = p*beta + theta
    Integer p = rational_floor(span / pt.beta);
    Rational theta = span - Rational(p) * pt.beta;
    long long pv = static_cast<long long>(p);
    return RegimeCoordinates{pv, theta};
}

inline OperatingPoint from_regime(const CodeParams& params, const RegimeCoordinates& rc,
                                  const Rational& beta) {
    params.validate();
    if (beta <= 0) throw std::domain_error("invalid operating point: require beta > 0");
    if (rc.p < 1 || rc.p > params.k)
        throw std::domain_error("regime p out of range: require 1 <= p <= k");
    if (rc.theta < 0 || rc.theta >= beta)
        throw std::domain_error("regime theta out of range: require 0 <= theta < beta");
    return OperatingPoint{Rational(params.d - rc.p + 1) * beta - rc.theta, beta};
}

}  // namespace rgc
