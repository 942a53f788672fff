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

#include <optional>
#include <stdexcept>
#include <vector>

#include "rgc/bounds.hpp"
#include "rgc/params.hpp"

namespace rgc {

enum class CurveKind { Functional, ExactOuter, SpaceSharing };

struct CurvePoint {
    CurveKind kind = CurveKind::Functional;
    OperatingPoint point;  // operating point supporting file size B
    NormalizedPoint normalized;
};

namespace detail {

// One linear piece of the bound over a theta interval inside segment p:
// bound(theta) = c0 + c1 * theta, alpha = (d-p+1)beta - theta.
struct BoundPiece {
    long long p = 0;
    Rational theta_lo;
    Rational theta_hi;  // exclusive
    Rational c0;
    Rational c1;
};

inline Rational functional_tail(const CodeParams& params, long long p) {
    // sum_{i=p+1}^{k} (d-i+1)
    Integer tail = (Integer(params.d - p) * (params.d - p + 1) -
                    Integer(params.d - params.k) * (params.d - params.k + 1)) /
                   2;
    return Rational(tail);
}

// Pieces in decreasing-alpha order: p ascending, theta ascending inside p.
inline std::vector<BoundPiece> bound_pieces(const CodeParams& params, const Rational& beta,
                                            CurveKind kind) {
    std::vector<BoundPiece> pieces;
    for (long long p = 1; p <= params.k; ++p) {
        Rational base = (Rational(p) * (params.d - p + 1) + functional_tail(params, p)) * beta;
        Rational slope(-p);
        auto push = [&](const Rational& lo, const Rational& hi, const EpsilonForm* eps) {
            BoundPiece piece{p, lo, hi, base, slope};
            if (eps) {
                piece.c0 -= eps->beta_coef * beta;
                piece.c1 -= eps->theta_coef;
            }
            pieces.push_back(piece);
        };
        if (kind != CurveKind::ExactOuter || params.k < 3) {
            push(0, beta, nullptr);
            continue;
        }
        if (p == 1 && params.k >= 3) {
            // eps1 vanishes at theta = 0, so one piece covers the whole
            // segment including the MBR endpoint.
            EpsilonForm f = epsilon1_form(params, p);
            push(0, beta, &f);
        } else if (p <= params.k - 2) {
            EpsilonForm e0 = epsilon0_form(params, p);
            EpsilonForm e1 = epsilon1_form(params, p);
            // bound uses max(eps0, eps1); the two linear forms cross at most
            // once inside [0, beta)
            std::optional<Rational> cross;
            if (e0.theta_coef != e1.theta_coef) {
                Rational t = (e1.beta_coef - e0.beta_coef) * beta /
                             (e0.theta_coef - e1.theta_coef);
                if (t > 0 && t < beta) cross = t;
            }
            auto larger_at = [&](const Rational& theta) {
                return e0.eval(beta, theta) >= e1.eval(beta, theta) ? &e0 : &e1;
            };
            if (cross) {
                push(0, *cross, larger_at(0));
                push(*cross, beta, larger_at((*cross + beta) / 2));
            } else {
                push(0, beta, larger_at(0));
            }
        } else if (p == params.k - 1) {
            EpsilonForm e0 = epsilon0_form(params, p);
            Rational limit = pkm1_theta_limit(params, beta);
            // eps0 is exactly zero at the limit, so the two pieces meet.
            push(0, limit, &e0);
            push(limit, beta, nullptr);
        } else {
            push(0, beta, nullptr);  // p = k, no improvement applies
        }
    }
    return pieces;
}

// Smallest alpha whose bound still reaches B, i.e. the rightmost crossing of
// bound(alpha) = B scanning down from the MBR end. Where the bound of the
// paper jumps at a piece junction, the junction itself keeps the larger
// one-sided value (any storage above the junction already supports B).
inline std::optional<Rational> min_alpha_for(const CodeParams& params, const Rational& file_size,
                                             const Rational& beta, CurveKind kind) {
    const std::vector<BoundPiece> pieces = bound_pieces(params, beta, kind);
    bool previous_ok = false;
    for (const BoundPiece& piece : pieces) {
        Rational at_start = piece.c0 + piece.c1 * piece.theta_lo;
        if (at_start < file_size) {
            if (previous_ok)
                return Rational(params.d - piece.p + 1) * beta - piece.theta_lo;
            return std::nullopt;  // infeasible already at the MBR end
        }
        Rational at_end = piece.c0 + piece.c1 * piece.theta_hi;  // open-end limit
        if (at_end < file_size) {
            if (piece.c1 == 0) return std::nullopt;
            Rational theta = (file_size - piece.c0) / piece.c1;
            return Rational(params.d - piece.p + 1) * beta - theta;
        }
        previous_ok = true;
    }
    return std::nullopt;  // bound exceeds B everywhere down to (d-k)beta
}

}  // namespace detail

// Samples the selected bound at file size B over a beta grid spanning the
// MBR..MSR range, returning for each beta the smallest feasible alpha.
// Points come out sorted by normalized repair bandwidth, descending.
inline std::vector<CurvePoint> sweep_curve(const CodeParams& params, const Rational& file_size,
                                           long long grid, CurveKind kind) {
    params.validate();
    if (file_size <= 0) throw std::domain_error("sweep: require B > 0");
    if (grid < 2) throw std::domain_error("sweep: require at least 2 grid points");

    std::vector<CurvePoint> out;
    if (kind == CurveKind::SpaceSharing) {
        for (long long j = 0; j < grid; ++j) {
            Rational t(j, grid - 1);
            ExtremalPoint base = space_sharing(params, Rational(1), t);
            Rational scale = file_size / base.file_size;
            OperatingPoint pt{base.point.alpha * scale, scale};
            out.push_back(CurvePoint{kind, pt, normalize(params, pt, file_size)});
        }
        return out;
    }

    const long long k = params.k, d = params.d;
    Rational beta_msr = file_size / (Rational(k) * (d - k + 1));
    Rational beta_mbr = 2 * file_size / (Rational(k) * (2 * d - k + 1));
    for (long long j = grid - 1; j >= 0; --j) {
        Rational beta = beta_mbr + Rational(j, grid - 1) * (beta_msr - beta_mbr);
        auto alpha = detail::min_alpha_for(params, file_size, beta, kind);
        if (!alpha) continue;  // infeasible grid point, omitted
        OperatingPoint pt{*alpha, beta};
        out.push_back(CurvePoint{kind, pt, normalize(params, pt, file_size)});
    }
    return out;
}

}  // namespace rgc
