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

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rgc/rational.hpp"

// Two-phase primal simplex over exact rationals, dense tableau. Pricing is
// Dantzig's rule; after a run of degenerate pivots it falls back to Bland's
// rule until the objective moves again, which rules out cycling while keeping
// the usual iteration counts. Everything is deterministic: ties break on the
// smallest column / smallest basic-variable index.

namespace rgc::lp {

enum class Relation { LE, EQ, GE };

enum class EngineStatus { Optimal, Infeasible, Unbounded };

struct EngineRow {
    std::vector<std::pair<int, Rational>> coefs;  // (structural column, coefficient)
    Relation rel = Relation::LE;
    Rational rhs;
};

struct EngineProblem {
    int num_vars = 0;
    std::vector<EngineRow> rows;
    std::vector<Rational> cost;  // minimized; size num_vars
};

struct EngineResult {
    EngineStatus status = EngineStatus::Optimal;
    Rational objective;              // min value when Optimal
    std::vector<Rational> solution;  // structural variables when Optimal
};

class SimplexSolver {
  public:
    explicit SimplexSolver(const EngineProblem& problem) { build(problem); }

    EngineResult run() {
        EngineResult result;
        if (num_artificial_ > 0) {
            load_costs(/*phase_one=*/true);
            if (iterate(/*phase_one=*/true) == Pivoting::Unbounded)
                throw std::logic_error("phase-one objective cannot be unbounded");
            if (objective_value_ != 0) {
                result.status = EngineStatus::Infeasible;
                return result;
            }
            evict_artificials();
        }
        load_costs(/*phase_one=*/false);
        if (iterate(/*phase_one=*/false) == Pivoting::Unbounded) {
            result.status = EngineStatus::Unbounded;
            return result;
        }
        result.status = EngineStatus::Optimal;
        result.objective = objective_value_;
        result.solution.assign(num_structural_, Rational(0));
        for (int i = 0; i < num_rows_; ++i)
            if (basis_[i] < num_structural_) result.solution[basis_[i]] = rhs(i);
        return result;
    }

  private:
    enum class Pivoting { Optimal, Unbounded };

    static constexpr int kStallLimit = 64;
    static constexpr long long kMaxIterations = 1'000'000;

    int num_rows_ = 0;
    int num_structural_ = 0;
    int num_cols_ = 0;  // structural + slack/surplus + artificial
    int num_artificial_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<Rational>> tableau_;  // num_rows x (num_cols + 1)
    std::vector<Rational> reduced_;               // size num_cols
    std::vector<Rational> phase2_cost_;           // size num_cols
    std::vector<int> basis_;
    Rational objective_value_;

    Rational& rhs(int row) { return tableau_[row][num_cols_]; }
    const Rational& rhs(int row) const { return tableau_[row][num_cols_]; }

    void build(const EngineProblem& problem) {
        num_rows_ = static_cast<int>(problem.rows.size());
        num_structural_ = problem.num_vars;

        int extra = 0, artificial = 0;
        std::vector<int> sign(num_rows_, 1);
        std::vector<Relation> rel(num_rows_);
        for (int i = 0; i < num_rows_; ++i) {
            rel[i] = problem.rows[i].rel;
            if (problem.rows[i].rhs < 0) {
                sign[i] = -1;
                if (rel[i] == Relation::LE)
                    rel[i] = Relation::GE;
                else if (rel[i] == Relation::GE)
                    rel[i] = Relation::LE;
            }
            if (rel[i] != Relation::EQ) ++extra;
            if (rel[i] != Relation::LE) ++artificial;
        }
        num_artificial_ = artificial;
        first_artificial_ = num_structural_ + extra;
        num_cols_ = first_artificial_ + artificial;

        tableau_.assign(num_rows_, std::vector<Rational>(num_cols_ + 1, Rational(0)));
        basis_.assign(num_rows_, -1);
        phase2_cost_.assign(num_cols_, Rational(0));
        for (int j = 0; j < num_structural_; ++j) phase2_cost_[j] = problem.cost[j];

        int next_extra = num_structural_;
        int next_art = first_artificial_;
        for (int i = 0; i < num_rows_; ++i) {
            const EngineRow& row = problem.rows[i];
            for (const auto& [col, coef] : row.coefs) {
                if (col < 0 || col >= num_structural_)
                    throw std::domain_error("engine row references unknown column");
                tableau_[i][col] += sign[i] > 0 ? coef : -coef;
            }
            rhs(i) = sign[i] > 0 ? row.rhs : -row.rhs;
            if (rel[i] == Relation::LE) {
                tableau_[i][next_extra] = 1;
                basis_[i] = next_extra++;
            } else if (rel[i] == Relation::GE) {
                tableau_[i][next_extra++] = -1;
                tableau_[i][next_art] = 1;
                basis_[i] = next_art++;
            } else {
                tableau_[i][next_art] = 1;
                basis_[i] = next_art++;
            }
        }
    }

    void load_costs(bool phase_one) {
        reduced_.assign(num_cols_, Rational(0));
        objective_value_ = 0;
        if (phase_one) {
            // phase-one cost is 1 on every artificial column
            for (int j = first_artificial_; j < num_cols_; ++j) reduced_[j] = 1;
            for (int i = 0; i < num_rows_; ++i) {
                if (basis_[i] < first_artificial_) continue;
                for (int j = 0; j < num_cols_; ++j)
                    if (!tableau_[i][j].is_zero()) reduced_[j] -= tableau_[i][j];
                objective_value_ += rhs(i);
            }
        } else {
            reduced_ = phase2_cost_;
            for (int i = 0; i < num_rows_; ++i) {
                const Rational cb = phase2_cost_[basis_[i]];
                if (cb.is_zero()) continue;
                for (int j = 0; j < num_cols_; ++j)
                    if (!tableau_[i][j].is_zero()) reduced_[j] -= cb * tableau_[i][j];
                objective_value_ += cb * rhs(i);
            }
        }
        for (int i = 0; i < num_rows_; ++i) reduced_[basis_[i]] = 0;
    }

    Pivoting iterate(bool phase_one) {
        int stall = 0;
        bool bland = false;
        for (long long it = 0; it < kMaxIterations; ++it) {
            int entering = pick_entering(bland, phase_one);
            if (entering < 0) return Pivoting::Optimal;
            int leaving = pick_leaving(entering);
            if (leaving < 0) return Pivoting::Unbounded;
            Rational before = objective_value_;
            pivot(leaving, entering);
            if (objective_value_ == before) {
                if (++stall > kStallLimit) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
        throw std::runtime_error("simplex iteration limit exceeded");
    }

    int pick_entering(bool bland, bool phase_one) const {
        const int limit = phase_one ? num_cols_ : first_artificial_;
        int best = -1;
        for (int j = 0; j < limit; ++j) {
            if (reduced_[j] >= 0) continue;
            if (bland) return j;
            if (best < 0 || reduced_[j] < reduced_[best]) best = j;
        }
        return best;
    }

    int pick_leaving(int entering) const {
        int best = -1;
        Rational best_ratio;
        for (int i = 0; i < num_rows_; ++i) {
            const Rational& a = tableau_[i][entering];
            if (a <= 0) continue;
            Rational ratio = rhs(i) / a;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(int row, int col) {
        std::vector<Rational>& prow = tableau_[row];
        Rational inv = Rational(1) / prow[col];
        std::vector<int> nonzero;
        nonzero.reserve(64);
        for (int j = 0; j <= num_cols_; ++j) {
            if (prow[j].is_zero()) continue;
            prow[j] *= inv;
            nonzero.push_back(j);
        }
        for (int i = 0; i < num_rows_; ++i) {
            if (i == row) continue;
            Rational factor = tableau_[i][col];
            if (factor.is_zero()) continue;
            std::vector<Rational>& target = tableau_[i];
            for (int j : nonzero) target[j] -= factor * prow[j];
        }
        Rational rfac = reduced_[col];
        if (!rfac.is_zero()) {
            for (int j : nonzero) {
                if (j == num_cols_)
                    objective_value_ += rfac * prow[j];
                else
                    reduced_[j] -= rfac * prow[j];
            }
        }
        basis_[row] = col;
    }

    // After phase one, swap any artificial still sitting in the basis (at
    // value zero) for a real column. Rows with no nonzero real entry are
    // redundant constraints; their artificial stays basic at zero and can
    // never re-enter or block a ratio test.
    void evict_artificials() {
        for (int i = 0; i < num_rows_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            for (int j = 0; j < first_artificial_; ++j) {
                if (!tableau_[i][j].is_zero()) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }
};

inline EngineResult solve_engine(const EngineProblem& problem) {
    return SimplexSolver(problem).run();
}

}  // namespace rgc::lp
