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

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "rgc/params.hpp"
#include "rgc/rational.hpp"

namespace rgc {

enum class Regime { P1, PMid, PKm1, NoImprovement };

inline std::string regime_name(Regime r) {
    switch (r) {
        case Regime::P1: return "P1";
        case Regime::PMid: return "PMid";
        case Regime::PKm1: return "PKm1";
        case Regime::NoImprovement: return "NoImprovement";
    }
    return "?";
}

inline std::optional<Regime> regime_from_name(const std::string& s) {
    if (s == "P1") return Regime::P1;
    if (s == "PMid") return Regime::PMid;
    if (s == "PKm1") return Regime::PKm1;
    if (s == "NoImprovement") return Regime::NoImprovement;
    return std::nullopt;
}

struct BoundResult {
    Rational b_cutset;
    Rational b_functional;  // the functional-repair optimum B-hat
    Rational b_exact;       // improved exact-repair bound, <= b_functional
    std::optional<Rational> eps0;
    std::optional<Rational> eps1;
    std::optional<long long> q0;
    std::optional<long long> q1;
    Regime regime = Regime::NoImprovement;
    bool improved = false;
    bool clamped = false;  // alpha was reduced to the MBR value d*beta

    friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

struct NormalizedPoint {
    Rational alpha_bar;  // n*alpha/B, storage overhead
    Rational gamma_bar;  // n*d*beta/B, normalized repair bandwidth

    friend bool operator==(const NormalizedPoint&, const NormalizedPoint&) = default;
};

struct GapResult {
    Rational gap;  // beta/B_exact - beta/B_functional
    Regime regime = Regime::NoImprovement;
};

// B <= sum_{i=1}^{k} min{alpha, (d-i+1)*beta}
inline Rational cut_set_bound(const CodeParams& params, const OperatingPoint& pt) {
    params.validate();
    if (pt.beta <= 0) throw std::domain_error("invalid operating point: require beta > 0");
    if (pt.alpha < 0) throw std::domain_error("invalid operating point: require alpha >= 0");
    Rational total = 0;
    for (long long i = 1; i <= params.k; ++i) {
        Rational cap = Rational(params.d - i + 1) * pt.beta;
        total += pt.alpha < cap ? pt.alpha : cap;
    }
    return total;
}

// B-hat = p*alpha + sum_{i=p+1}^{k} (d-i+1)*beta with alpha taken from (p, theta).
inline Rational functional_optimal_B(const CodeParams& params, const RegimeCoordinates& rc,
                                     const Rational& beta) {
    OperatingPoint pt = from_regime(params, rc, beta);
    // sum_{i=p+1}^{k} (d-i+1) = sum of d-k+1 .. d-p
    Integer tail = (Integer(params.d - rc.p) * (params.d - rc.p + 1) -
                    Integer(params.d - params.k) * (params.d - params.k + 1)) /
                   2;
    return Rational(rc.p) * pt.alpha + Rational(tail) * beta;
}

// A gap lower bound as a linear form c_beta*beta + c_theta*theta.
struct EpsilonForm {
    Rational beta_coef;
    Rational theta_coef;
    long long q = 0;

    Rational eval(const Rational& beta, const Rational& theta) const {
        return beta_coef * beta + theta_coef * theta;
    }
};

// eps0 branches on q0 = floor((k-p+1)/p); q0 = 0 exactly when k-p+1 < p,
// which is the table's branch condition (asserted below).
inline EpsilonForm epsilon0_form(const CodeParams& params, long long p) {
    params.validate();
    const long long k = params.k, d = params.d;
    if (p < 2 || p > k - 1)
        throw std::domain_error("eps0 undefined: require p in {2..k-1}");
    long long q0 = (k - p + 1) / p;
    assert((q0 == 0) == (k - p + 1 < p));
    if (q0 == 0) {
        Rational a = Rational(d - k + 1) * (k - p);
        Rational den = Rational(d - k + 1) * (k - p + 1) + 1;
        return EpsilonForm{a / den, -(a + 1) / den, q0};
    }
    // rows = sum_{i=1}^{q0} (d-(i+1)p+2) = q0*(d - p(q0+3)/2 + 2)
    Rational rows = Rational(q0) * (Rational(d + 2) - Rational(p * (q0 + 3), 2));
    Rational a = rows * (p - 1);
    Rational den = rows * p + 1;
    return EpsilonForm{a / den, -(a + 1) / den, q0};
}

// eps1 branches on q1 = floor((k-p)/(p+1)); q1 = 0 exactly when k-p < p+1.
inline EpsilonForm epsilon1_form(const CodeParams& params, long long p) {
    params.validate();
    const long long k = params.k, d = params.d;
    if (p < 1 || p > k - 2)
        throw std::domain_error("eps1 undefined: require p in {1..k-2}");
    long long q1 = (k - p) / (p + 1);
    assert((q1 == 0) == (k - p < p + 1));
    if (q1 == 0) {
        Rational c = Rational(d - k + 1);
        Rational den = c * (k - p) + 1;
        return EpsilonForm{c * (k - p - 2) / den, c / den, q1};
    }
    Rational rows = Rational(q1) * (Rational(d + 2) - Rational((p + 1) * (q1 + 3), 2));
    Rational den = rows * (p + 1) + 1;
    return EpsilonForm{rows * (p - 1) / den, rows / den, q1};
}

inline Rational epsilon0(const CodeParams& params, const RegimeCoordinates& rc,
                         const Rational& beta) {
    return epsilon0_form(params, rc.p).eval(beta, rc.theta);
}

inline Rational epsilon1(const CodeParams& params, const RegimeCoordinates& rc,
                         const Rational& beta) {
    return epsilon1_form(params, rc.p).eval(beta, rc.theta);
}

// theta below (d-k+1)/(d-k+2) * beta is where the p = k-1 improvement holds.
inline Rational pkm1_theta_limit(const CodeParams& params, const Rational& beta) {
    return Rational(params.d - params.k + 1) * beta / Rational(params.d - params.k + 2);
}

// The improved exact-repair bound. Outside the three improvement regimes
// (including every k < 3) the functional value is returned unchanged and
// flagged NoImprovement; that is a valid result, not an error.
inline BoundResult exact_repair_bound(const CodeParams& params, const OperatingPoint& point) {
    auto [pt, clamped] = clamp_to_mbr(params, point);
    RegimeCoordinates rc = to_regime(params, pt);
    const long long k = params.k, p = rc.p;

    BoundResult res;
    res.clamped = clamped;
    res.b_cutset = cut_set_bound(params, pt);
    res.b_functional = functional_optimal_B(params, rc, pt.beta);
    res.b_exact = res.b_functional;
    res.regime = Regime::NoImprovement;

    if (k >= 3 && p >= 2 && p <= k - 1) {
        EpsilonForm f = epsilon0_form(params, p);
        res.eps0 = f.eval(pt.beta, rc.theta);
        res.q0 = f.q;
    }
    if (k >= 3 && p >= 1 && p <= k - 2) {
        EpsilonForm f = epsilon1_form(params, p);
        res.eps1 = f.eval(pt.beta, rc.theta);
        res.q1 = f.q;
    }

    if (k >= 3) {
        if (p == 1 && rc.theta != 0) {
            res.regime = Regime::P1;
            res.b_exact = res.b_functional - *res.eps1;
        } else if (p >= 2 && p <= k - 2) {
            res.regime = Regime::PMid;
            Rational eps = *res.eps0 > *res.eps1 ? *res.eps0 : *res.eps1;
            res.b_exact = res.b_functional - eps;
        } else if (p == k - 1 && rc.theta < pkm1_theta_limit(params, pt.beta)) {
            res.regime = Regime::PKm1;
            res.b_exact = res.b_functional - *res.eps0;
        }
    }
    res.improved = res.b_exact < res.b_functional;
    return res;
}

// beta/B_exact - beta/B_functional, strictly positive inside the regimes.
inline GapResult corollary_gap(const CodeParams& params, const OperatingPoint& pt) {
    BoundResult b = exact_repair_bound(params, pt);
    if (!b.improved) return GapResult{Rational(0), Regime::NoImprovement};
    return GapResult{pt.beta / b.b_exact - pt.beta / b.b_functional, b.regime};
}

inline NormalizedPoint normalize(const CodeParams& params, const OperatingPoint& pt,
                                 const Rational& file_size) {
    params.validate();
    if (file_size <= 0) throw std::domain_error("normalize: require B > 0");
    return NormalizedPoint{Rational(params.n) * pt.alpha / file_size,
                           Rational(params.n) * Rational(params.d) * pt.beta / file_size};
}

struct ExtremalPoint {
    OperatingPoint point;
    Rational file_size;
};

struct ExtremalPoints {
    ExtremalPoint msr;
    ExtremalPoint mbr;
};

inline ExtremalPoints extremal_points(const CodeParams& params, const Rational& beta) {
    params.validate();
    if (beta <= 0) throw std::domain_error("invalid operating point: require beta > 0");
    Rational msr_alpha = Rational(params.d - params.k + 1) * beta;
    ExtremalPoint msr{OperatingPoint{msr_alpha, beta}, Rational(params.k) * msr_alpha};
    OperatingPoint mbr_pt{Rational(params.d) * beta, beta};
    ExtremalPoints out{msr, ExtremalPoint{mbr_pt, cut_set_bound(params, mbr_pt)}};
    return out;
}

// Splitting the file between an MSR and an MBR code at the same beta traces
// the straight segment between the two extremes.
inline ExtremalPoint space_sharing(const CodeParams& params, const Rational& beta,
                                   const Rational& t) {
    if (t < 0 || t > 1) throw std::domain_error("space sharing: require t in [0, 1]");
    ExtremalPoints ex = extremal_points(params, beta);
    Rational alpha = (1 - t) * ex.msr.point.alpha + t * ex.mbr.point.alpha;
    Rational b = (1 - t) * ex.msr.file_size + t * ex.mbr.file_size;
    return ExtremalPoint{OperatingPoint{alpha, beta}, b};
}

}  // namespace rgc
