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
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/entropy_expr.hpp"
#include "rgc/simplex.hpp"

// Linear programs over the 2^n_v - 1 joint-entropy coordinates of n_v random
// variables. With the elemental inequalities included, the feasible set is
// the Shannon outer bound intersected with the problem constraints, so an
// Optimal answer certifies every inequality derivable by Shannon-type steps
// from those constraints.
//
// Solving goes through the LP dual: the constraint count dwarfs the
// coordinate count here, so the dual keeps the simplex basis small, and its
// optimal point is exactly the multiplier certificate we want to hand back.

namespace rgc::lp {

enum class Sense { Min, Max };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPConstraint {
    EntropyExpr expr;
    Relation rel = Relation::LE;
    Rational rhs;
};

struct LPProblem {
    int num_vars = 0;
    std::vector<LPConstraint> constraints;
    EntropyExpr objective;
    Sense sense = Sense::Max;

    SubsetMask full_mask() const { return (SubsetMask{1} << num_vars) - 1; }

    void check_mask(SubsetMask mask) const {
        if (mask == 0 || mask > full_mask())
            throw std::domain_error("subset mask out of range for this variable count");
    }

    void check_expr(const EntropyExpr& e) const {
        for (const auto& [mask, coef] : e.terms()) check_mask(mask);
    }

    void add(EntropyExpr expr, Relation rel, Rational rhs) {
        check_expr(expr);
        constraints.push_back(LPConstraint{std::move(expr), rel, std::move(rhs)});
    }
    void add_le(EntropyExpr e, Rational rhs) { add(std::move(e), Relation::LE, std::move(rhs)); }
    void add_ge(EntropyExpr e, Rational rhs) { add(std::move(e), Relation::GE, std::move(rhs)); }
    void add_eq(EntropyExpr e, Rational rhs) { add(std::move(e), Relation::EQ, std::move(rhs)); }
};

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rational> value;
    // One nonnegative multiplier per normalized row (see normalized_rows);
    // recombines the constraints into the optimal bound.
    std::optional<std::vector<Rational>> dual_certificate;
};

// All elemental forms for n_v variables: H(X_i | rest) >= 0 and
// I(X_i ; X_j | X_K) >= 0 for i < j, K over the remaining variables.
// Count: n_v + C(n_v, 2) * 2^(n_v - 2).
inline std::vector<EntropyExpr> elemental_inequalities(int n_v) {
    if (n_v < 1 || n_v > kMaxVariables)
        throw std::domain_error("elemental inequalities need 1 <= n_v <= 12");
    std::vector<EntropyExpr> out;
    const SubsetMask full = (SubsetMask{1} << n_v) - 1;
    for (int i = 0; i < n_v; ++i)
        out.push_back(EntropyExpr::conditional(SubsetMask{1} << i, full & ~(SubsetMask{1} << i)));
    for (int i = 0; i < n_v; ++i) {
        for (int j = i + 1; j < n_v; ++j) {
            SubsetMask mi = SubsetMask{1} << i, mj = SubsetMask{1} << j;
            SubsetMask others = full & ~(mi | mj);
            // enumerate K as submasks of `others`, including the empty set
            SubsetMask sub = 0;
            while (true) {
                out.push_back(EntropyExpr::mutual(mi, mj, sub));
                if (sub == others) break;
                sub = (sub - others) & others;  // next submask
            }
        }
    }
    return out;
}

// A problem pre-loaded with the Shannon outer bound.
inline LPProblem standard_problem(int n_v, Sense sense = Sense::Max) {
    LPProblem p;
    p.num_vars = n_v;
    p.sense = sense;
    for (auto& e : elemental_inequalities(n_v)) p.add_ge(std::move(e), Rational(0));
    return p;
}

// Adds H(of | given) = 0. Overlapping sets are rejected: conditioning a set
// on itself says nothing.
inline void functional_dependency(LPProblem& problem, SubsetMask of, SubsetMask given) {
    problem.check_mask(of);
    if (given != 0) problem.check_mask(given);
    if ((of & given) != 0)
        throw std::domain_error("functional dependency: sets overlap");
    problem.add_eq(EntropyExpr::conditional(of, given), Rational(0));
}

// The problem as a list of `coefs . h <= rhs` rows, in constraint order with
// expression constants folded into the rhs. Equalities expand to a <= row
// followed by its negation; >= rows are negated. Certificates index this
// list.
struct NormalizedRow {
    std::map<SubsetMask, Rational> coefs;
    Rational rhs;
};

inline std::vector<NormalizedRow> normalized_rows(const LPProblem& problem) {
    std::vector<NormalizedRow> rows;
    for (const LPConstraint& c : problem.constraints) {
        NormalizedRow forward{{}, c.rhs - c.expr.constant()};
        for (const auto& [mask, coef] : c.expr.terms()) forward.coefs[mask] = coef;
        if (c.rel == Relation::LE || c.rel == Relation::EQ) rows.push_back(forward);
        if (c.rel == Relation::GE || c.rel == Relation::EQ) {
            NormalizedRow backward{{}, -forward.rhs};
            for (const auto& [mask, coef] : forward.coefs) backward.coefs[mask] = -coef;
            rows.push_back(std::move(backward));
        }
    }
    return rows;
}

namespace detail {

// Feasibility of the primal (coordinates >= 0, rows as <=) by phase one.
inline bool primal_feasible(const LPProblem& problem,
                            const std::vector<NormalizedRow>& rows) {
    const int num_coords = static_cast<int>(problem.full_mask());
    EngineProblem ep;
    ep.num_vars = num_coords;
    ep.cost.assign(num_coords, Rational(0));
    for (const NormalizedRow& row : rows) {
        EngineRow er;
        er.rel = Relation::LE;
        er.rhs = row.rhs;
        for (const auto& [mask, coef] : row.coefs)
            er.coefs.emplace_back(static_cast<int>(mask) - 1, coef);
        ep.rows.push_back(std::move(er));
    }
    return solve_engine(ep).status == EngineStatus::Optimal;
}

}  // namespace detail

inline LPSolution solve(const LPProblem& problem) {
    if (problem.num_vars < 1 || problem.num_vars > kMaxVariables)
        throw std::domain_error("LP variable count must be in 1..12");
    problem.check_expr(problem.objective);

    const std::vector<NormalizedRow> rows = normalized_rows(problem);
    const SubsetMask full = problem.full_mask();

    // objective as a max problem: min problems flip sign here and flip back
    const bool minimize = problem.sense == Sense::Min;
    std::map<SubsetMask, Rational> goal;
    for (const auto& [mask, coef] : problem.objective.terms())
        goal[mask] = minimize ? Rational(-coef) : coef;

    // Dual: min rhs.y  s.t.  sum_k coefs_k[T] y_k >= goal[T] for every
    // coordinate T, y >= 0. Coordinates no row touches only matter if the
    // objective wants them positive, in which case the dual row 0 >= goal[T]
    // is infeasible and the primal is unbounded, as it should be.
    std::vector<int> coord_row(full + 1, -1);
    std::vector<SubsetMask> active;
    auto touch = [&](SubsetMask mask) {
        if (coord_row[mask] < 0) {
            coord_row[mask] = static_cast<int>(active.size());
            active.push_back(mask);
        }
    };
    for (const NormalizedRow& row : rows)
        for (const auto& [mask, coef] : row.coefs) touch(mask);
    for (const auto& [mask, coef] : goal)
        if (coef != 0) touch(mask);

    EngineProblem dual;
    dual.num_vars = static_cast<int>(rows.size());
    dual.cost.reserve(rows.size());
    for (const NormalizedRow& row : rows) dual.cost.push_back(row.rhs);
    dual.rows.assign(active.size(), EngineRow{});
    for (std::size_t t = 0; t < active.size(); ++t) {
        dual.rows[t].rel = Relation::GE;
        auto it = goal.find(active[t]);
        dual.rows[t].rhs = it == goal.end() ? Rational(0) : it->second;
    }
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (const auto& [mask, coef] : rows[k].coefs)
            dual.rows[coord_row[mask]].coefs.emplace_back(static_cast<int>(k), coef);

    EngineResult res = solve_engine(dual);
    LPSolution out;
    switch (res.status) {
        case EngineStatus::Optimal: {
            out.status = LPStatus::Optimal;
            Rational v = res.objective + (minimize ? -problem.objective.constant()
                                                   : problem.objective.constant());
            out.value = minimize ? Rational(-v) : v;
            out.dual_certificate = std::move(res.solution);
            break;
        }
        case EngineStatus::Unbounded:
            out.status = LPStatus::Infeasible;
            break;
        case EngineStatus::Infeasible:
            out.status = detail::primal_feasible(problem, rows) ? LPStatus::Unbounded
                                                                : LPStatus::Infeasible;
            break;
    }
    return out;
}

// Exact recombination check: multipliers are nonnegative, dominate the
// objective coordinate-wise, and price out to the optimal value.
inline bool verify_certificate(const LPProblem& problem, const LPSolution& solution) {
    if (solution.status != LPStatus::Optimal || !solution.value || !solution.dual_certificate)
        return false;
    const std::vector<NormalizedRow> rows = normalized_rows(problem);
    const std::vector<Rational>& lambda = *solution.dual_certificate;
    if (lambda.size() != rows.size()) return false;

    std::map<SubsetMask, Rational> combo;
    Rational bound = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (lambda[k] < 0) return false;
        if (lambda[k] == 0) continue;
        for (const auto& [mask, coef] : rows[k].coefs) combo[mask] += lambda[k] * coef;
        bound += lambda[k] * rows[k].rhs;
    }

    const bool minimize = problem.sense == Sense::Min;
    // combo must dominate the (max-form) objective on every coordinate
    std::map<SubsetMask, Rational> goal;
    for (const auto& [mask, coef] : problem.objective.terms())
        goal[mask] = minimize ? Rational(-coef) : coef;
    for (const auto& [mask, coef] : goal)
        if (combo[mask] < coef) return false;
    for (const auto& [mask, coef] : combo)
        if (coef < 0 && goal.find(mask) == goal.end()) return false;

    Rational claimed = minimize ? Rational(problem.objective.constant() - bound)
                                : Rational(bound + problem.objective.constant());
    return claimed == *solution.value;
}

// ---------------------------------------------------------------------------
// Line-oriented text serialization, used for fixture storage and debugging.
//
//   entropy-lp 1
//   vars 3
//   sense max
//   obj +1@7
//   st +1@1 <= 5
//   st +1@3 -1@2 = 0
//   end
//
// Terms are coef@mask with exact rational coefficients; mask 0 carries a
// constant. Solutions use `entropy-lp-solution 1` with status/value/dual
// lines.

inline std::string relation_token(Relation rel) {
    switch (rel) {
        case Relation::LE: return "<=";
        case Relation::EQ: return "=";
        case Relation::GE: return ">=";
    }
    return "?";
}

inline std::string to_text(const LPProblem& problem) {
    std::ostringstream out;
    out << "entropy-lp 1\n";
    out << "vars " << problem.num_vars << "\n";
    out << "sense " << (problem.sense == Sense::Max ? "max" : "min") << "\n";
    out << "obj " << problem.objective.key() << "\n";
    for (const LPConstraint& c : problem.constraints)
        out << "st " << c.expr.key() << " " << relation_token(c.rel) << " "
            << to_fraction_string(c.rhs) << "\n";
    out << "end\n";
    return out.str();
}

namespace detail {

inline EntropyExpr parse_terms(std::istringstream& in, std::string& pending) {
    EntropyExpr expr;
    std::string tok;
    while (in >> tok) {
        auto at = tok.find('@');
        if (at == std::string::npos) {
            pending = tok;
            return expr;
        }
        auto coef = parse_rational(tok.substr(0, at));
        if (!coef) throw std::invalid_argument("bad coefficient in term: " + tok);
        unsigned long mask = std::stoul(tok.substr(at + 1));
        if (mask == 0)
            expr.add_constant(*coef);  // @0 carries the constant on the wire
        else
            expr.add_term(static_cast<SubsetMask>(mask), *coef);
    }
    pending.clear();
    return expr;
}

}  // namespace detail

inline LPProblem parse_problem(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    LPProblem p;
    bool saw_header = false, saw_end = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!saw_header) {
            if (tag != "entropy-lp") throw std::invalid_argument("missing entropy-lp header");
            saw_header = true;
        } else if (tag == "vars") {
            ls >> p.num_vars;
            if (p.num_vars < 1 || p.num_vars > kMaxVariables)
                throw std::invalid_argument("vars out of range");
        } else if (tag == "sense") {
            std::string s;
            ls >> s;
            if (s == "max")
                p.sense = Sense::Max;
            else if (s == "min")
                p.sense = Sense::Min;
            else
                throw std::invalid_argument("bad sense: " + s);
        } else if (tag == "obj") {
            std::string rest;
            p.objective = detail::parse_terms(ls, rest);
            if (!rest.empty()) throw std::invalid_argument("trailing token in objective");
            p.check_expr(p.objective);
        } else if (tag == "st") {
            std::string rel_tok;
            EntropyExpr expr = detail::parse_terms(ls, rel_tok);
            Relation rel;
            if (rel_tok == "<=")
                rel = Relation::LE;
            else if (rel_tok == "=")
                rel = Relation::EQ;
            else if (rel_tok == ">=")
                rel = Relation::GE;
            else
                throw std::invalid_argument("bad relation: " + rel_tok);
            std::string rhs_tok;
            if (!(ls >> rhs_tok)) throw std::invalid_argument("missing rhs");
            p.add(std::move(expr), rel, parse_rational_or_throw(rhs_tok));
        } else if (tag == "end") {
            saw_end = true;
            break;
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (!saw_header || !saw_end) throw std::invalid_argument("truncated entropy-lp text");
    return p;
}

inline std::string to_text(const LPSolution& solution) {
    std::ostringstream out;
    out << "entropy-lp-solution 1\n";
    switch (solution.status) {
        case LPStatus::Optimal: out << "status optimal\n"; break;
        case LPStatus::Infeasible: out << "status infeasible\n"; break;
        case LPStatus::Unbounded: out << "status unbounded\n"; break;
    }
    if (solution.value) out << "value " << to_fraction_string(*solution.value) << "\n";
    if (solution.dual_certificate) {
        out << "dual " << solution.dual_certificate->size();
        for (const Rational& l : *solution.dual_certificate)
            out << " " << to_fraction_string(l);
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

inline LPSolution parse_solution(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    LPSolution sol;
    bool saw_header = false, saw_end = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!saw_header) {
            if (tag != "entropy-lp-solution")
                throw std::invalid_argument("missing entropy-lp-solution header");
            saw_header = true;
        } else if (tag == "status") {
            std::string s;
            ls >> s;
            if (s == "optimal")
                sol.status = LPStatus::Optimal;
            else if (s == "infeasible")
                sol.status = LPStatus::Infeasible;
            else if (s == "unbounded")
                sol.status = LPStatus::Unbounded;
            else
                throw std::invalid_argument("bad status: " + s);
        } else if (tag == "value") {
            std::string v;
            ls >> v;
            sol.value = parse_rational_or_throw(v);
        } else if (tag == "dual") {
            std::size_t count = 0;
            ls >> count;
            std::vector<Rational> duals;
            duals.reserve(count);
            std::string tok;
            while (ls >> tok) duals.push_back(parse_rational_or_throw(tok));
            if (duals.size() != count) throw std::invalid_argument("dual count mismatch");
            sol.dual_certificate = std::move(duals);
        } else if (tag == "end") {
            saw_end = true;
            break;
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (!saw_header || !saw_end) throw std::invalid_argument("truncated solution text");
    return sol;
}

}  // namespace rgc::lp
