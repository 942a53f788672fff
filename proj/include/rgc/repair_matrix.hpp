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

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/bounds.hpp"
#include "rgc/params.hpp"
#include "rgc/rational.hpp"

// Combinatorial model of the (d+1) x (d+1) repair matrix: cell (x, y) is the
// helper data sent by node x when node y is rebuilt. The four region shapes
// below re-derive the closed-form gap bounds from explicit cell sets, giving
// an oracle that is independent of the formulas in bounds.hpp. n is d+1
// throughout this module; larger n changes nothing about these regions.

namespace rgc::repair {

struct RepairSymbol {
    long long x = 0;  // helper node (row)
    long long y = 0;  // repaired node (column)

    friend auto operator<=>(const RepairSymbol&, const RepairSymbol&) = default;
};

using CellSet = std::set<RepairSymbol>;

enum class ProofCase { C1a, C1b, C2a, C2b };

inline std::string proof_case_name(ProofCase c) {
    switch (c) {
        case ProofCase::C1a: return "1a";
        case ProofCase::C1b: return "1b";
        case ProofCase::C2a: return "2a";
        case ProofCase::C2b: return "2b";
    }
    return "?";
}

inline std::optional<ProofCase> proof_case_from_name(const std::string& s) {
    if (s == "1a") return ProofCase::C1a;
    if (s == "1b") return ProofCase::C1b;
    if (s == "2a") return ProofCase::C2a;
    if (s == "2b") return ProofCase::C2b;
    return std::nullopt;
}

struct RegionGroup {
    CellSet rect;      // widest full-width rows of the trapezium slice
    CellSet triangle;  // the remaining cells above the rectangle
};

struct RegionSpec {
    ProofCase proof_case = ProofCase::C1a;
    CodeParams params;
    long long p = 0;
    long long q = 0;  // q0 for case 1, q1 for case 2 (0 in the b-variants)
    CellSet cells;
    std::vector<RegionGroup> groups;
};

// Linear form c_b*beta + c_t*theta + c_e*eps.
struct LinearForm {
    Rational beta_coef;
    Rational theta_coef;
    Rational eps_coef;

    Rational eval(const Rational& beta, const Rational& theta, const Rational& eps) const {
        return beta_coef * beta + theta_coef * theta + eps_coef * eps;
    }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline long long q0_of(const CodeParams& params, long long p) { return (params.k - p + 1) / p; }
inline long long q1_of(const CodeParams& params, long long p) { return (params.k - p) / (p + 1); }

inline ProofCase case_for_eps0(const CodeParams& params, long long p) {
    if (p < 2 || p > params.k - 1)
        throw std::domain_error("eps0 case undefined: require p in {2..k-1}");
    return q0_of(params, p) >= 1 ? ProofCase::C1a : ProofCase::C1b;
}

inline ProofCase case_for_eps1(const CodeParams& params, long long p) {
    if (p < 1 || p > params.k - 2)
        throw std::domain_error("eps1 case undefined: require p in {1..k-2}");
    return q1_of(params, p) >= 1 ? ProofCase::C2a : ProofCase::C2b;
}

inline RegionSpec build_region(const CodeParams& params, long long p, ProofCase proof_case) {
    params.validate();
    const long long k = params.k, d = params.d;
    const bool case1 = proof_case == ProofCase::C1a || proof_case == ProofCase::C1b;
    if (case1 && (p < 2 || p > k - 1))
        throw std::domain_error("case 1 regions require p in {2..k-1}");
    if (!case1 && (p < 1 || p > k - 2))
        throw std::domain_error("case 2 regions require p in {1..k-2}");

    const long long q = case1 ? q0_of(params, p) : q1_of(params, p);
    const bool subdivided = proof_case == ProofCase::C1a || proof_case == ProofCase::C2a;
    if (subdivided && q < 1)
        throw std::domain_error("case mismatch: " + proof_case_name(proof_case) +
                                " requires q >= 1 but q = 0 here");
    if (!subdivided && q != 0)
        throw std::domain_error("case mismatch: " + proof_case_name(proof_case) +
                                " requires q = 0 but q = " + std::to_string(q) + " here");

    const long long w = case1 ? p : p + 1;  // group width in columns

    RegionSpec region;
    region.proof_case = proof_case;
    region.params = params;
    region.p = p;
    region.q = q;

    auto insert_range = [&](CellSet& out, long long x_lo, long long x_hi, long long y_lo,
                            long long y_hi) {
        for (long long x = x_lo; x <= x_hi; ++x)
            for (long long y = y_lo; y <= y_hi; ++y)
                if (x > y) {
                    out.insert(RepairSymbol{x, y});
                    region.cells.insert(RepairSymbol{x, y});
                }
    };

    if (subdivided) {
        // q groups of w columns each, starting at column w.
        for (long long i = 1; i <= q; ++i) {
            RegionGroup g;
            insert_range(g.rect, w * (i + 1), d + 1, w * i, w * (i + 1) - 1);
            insert_range(g.triangle, w * i + 1, w * (i + 1) - 1, w * i, w * (i + 1) - 1);
            region.groups.push_back(std::move(g));
        }
    } else {
        // single trapezium over columns w..k
        RegionGroup g;
        insert_range(g.rect, k + 1, d + 1, w, k);
        insert_range(g.triangle, w + 1, k, w, k);
        region.groups.push_back(std::move(g));
    }
    return region;
}

// Joint-entropy upper bound rebuilt from the materialized cells: full rows of
// each rectangle take the row bound (beta + (l-1)theta + l*eps in case 1,
// 2beta - theta + l*eps in case 2, l = observed row width); triangle cells
// take beta each.
inline LinearForm upper_bound_form(const RegionSpec& region) {
    const bool case1 =
        region.proof_case == ProofCase::C1a || region.proof_case == ProofCase::C1b;
    LinearForm form{0, 0, 0};
    for (const RegionGroup& g : region.groups) {
        std::map<long long, long long> row_width;
        for (const RepairSymbol& cell : g.rect) row_width[cell.x]++;
        for (auto [x, width] : row_width) {
            if (case1) {
                form.beta_coef += 1;
                form.theta_coef += width - 1;
            } else {
                form.beta_coef += 2;
                form.theta_coef -= 1;
            }
            form.eps_coef += width;
        }
        form.beta_coef += Rational(static_cast<long long>(g.triangle.size()));
    }
    return form;
}

// Joint-entropy lower bound over the region's columns:
// sum_y min{alpha, (d-y+1)beta} - eps, with alpha = (d-p+1)beta - theta.
// Columns y <= p contribute alpha (hence the theta term); deeper columns
// contribute (d-y+1)beta. Valid identically in theta on [0, beta).
inline LinearForm lower_bound_form(const RegionSpec& region) {
    std::set<long long> columns;
    for (const RepairSymbol& cell : region.cells) columns.insert(cell.y);
    LinearForm form{0, 0, -1};
    for (long long y : columns) {
        if (y <= region.p) {
            form.beta_coef += region.params.d - region.p + 1;
            form.theta_coef -= 1;
        } else {
            form.beta_coef += region.params.d - y + 1;
        }
    }
    return form;
}

// Smallest eps with upper >= lower, as a form in (beta, theta). The lower
// form carries eps with coefficient -1, so
//   eps* = (L0 - U0) / (upper.eps_coef + 1).
inline EpsilonForm solve_epsilon_form(const RegionSpec& region) {
    LinearForm upper = upper_bound_form(region);
    LinearForm lower = lower_bound_form(region);
    Rational den = upper.eps_coef + 1;
    return EpsilonForm{(lower.beta_coef - upper.beta_coef) / den,
                       (lower.theta_coef - upper.theta_coef) / den, region.q};
}

inline Rational solve_epsilon(const RegionSpec& region, const Rational& beta,
                              const Rational& theta) {
    if (theta < 0 || theta >= beta)
        throw std::domain_error("solve_epsilon: require theta in [0, beta)");
    return solve_epsilon_form(region).eval(beta, theta);
}

// lhs = sum_{i=1}^{q} (d - (i+1)p + 2), rhs = q(d - p(q+3)/2 + 2).
// Returned as a pair so the identity is asserted by the caller.
inline std::pair<Rational, Rational> row_sum_identity(long long d, long long p_eff,
                                                      long long q) {
    if (q < 1 || p_eff < 1) throw std::domain_error("row_sum_identity: require q, p_eff >= 1");
    Rational lhs = 0;
    for (long long i = 1; i <= q; ++i) lhs += Rational(d - (i + 1) * p_eff + 2);
    Rational rhs = Rational(q) * (Rational(d + 2) - Rational(p_eff * (q + 3), 2));
    return {lhs, rhs};
}

// ASCII picture of the repair matrix: '\' diagonal, R/T region cells,
// '.' elsewhere.
inline std::string render_region(const RegionSpec& region) {
    const long long size = region.params.d + 1;
    if (size > 40) throw std::domain_error("render_region: d+1 must be at most 40");
    std::vector<std::string> grid(static_cast<std::size_t>(size),
                                  std::string(static_cast<std::size_t>(size), '.'));
    for (long long i = 0; i < size; ++i) grid[i][i] = '\\';
    for (const RegionGroup& g : region.groups) {
        for (const RepairSymbol& cell : g.rect) grid[cell.x - 1][cell.y - 1] = 'R';
        for (const RepairSymbol& cell : g.triangle) grid[cell.x - 1][cell.y - 1] = 'T';
    }
    std::string out;
    for (long long x = 0; x < size; ++x) {
        for (long long y = 0; y < size; ++y) {
            if (y) out += ' ';
            out += grid[x][y];
        }
        out += '\n';
    }
    return out;
}

}  // namespace rgc::repair
