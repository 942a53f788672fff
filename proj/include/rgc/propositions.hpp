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
#include <vector>

#include "rgc/entropy_lp.hpp"
#include "rgc/params.hpp"

// LP instances certifying the two joint-entropy propositions behind the
// improved bound. Each instance carries only the random variables the proof
// actually manipulates, with the regenerating-code structure injected as
// linear constraints:
//
//   row bound (max H of one helper row segment): variables are the repaired
//   node W_m, the conditioning set W_R with the repaired columns L inside R,
//   and the helper data S_m^j for j in L. Helper data is a function of W_m;
//   repairing j from d helpers leaves (d-r)*beta of unseen helper data once
//   S_m^j and W_{R\j} are known; conditional node entropies inherit the
//   cut-set floor up to eps.
//
//   column bound (min H of a region): three aggregate blocks W_A, W_L, S
//   with L decodable from S plus A.
//
// If the LP optimum ever crossed the closed-form right-hand side, some step
// of the underlying chain would not be derivable from these constraints.

namespace rgc::lp {

enum class Proposition { ColumnLower, RowUpper };  // Prop 1, Prop 2

struct PropInstance {
    Proposition which = Proposition::RowUpper;
    long long r = 0;    // RowUpper: |R|; ColumnLower: |A|
    long long ell = 0;  // |L|
    long long p = 0;
    long long d = 0;
    long long k = 0;
    Rational alpha;
    Rational beta;
    Rational theta;
    Rational epsilon;

    void validate() const {
        if (k < 1 || d < k) throw std::domain_error("prop instance: require 1 <= k <= d");
        if (beta <= 0) throw std::domain_error("prop instance: require beta > 0");
        if (theta < 0 || theta >= beta)
            throw std::domain_error("prop instance: require theta in [0, beta)");
        if (p < 1 || p > k) throw std::domain_error("prop instance: require p in {1..k}");
        if (alpha != Rational(d - p + 1) * beta - theta)
            throw std::domain_error("prop instance: alpha must equal (d-p+1)beta - theta");
        if (epsilon < 0) throw std::domain_error("prop instance: require eps >= 0");
        if (which == Proposition::RowUpper) {
            if (ell < 1 || ell > r)
                throw std::domain_error("row instance: require 1 <= ell <= r (L inside R)");
            if (r >= k) throw std::domain_error("row instance: require r < k");
            if (r != p && r != p + 1)
                throw std::domain_error("row instance: require r = p or r = p+1");
            if (1 + r + ell > kMaxVariables)
                throw std::domain_error("row instance: too many variables (limit 12)");
        } else {
            if (r < 0 || ell < 1 || r + ell > k)
                throw std::domain_error("column instance: require |A| >= 0, |L| >= 1, |A|+|L| <= k");
        }
    }

    Rational cut_floor(long long position) const {
        Rational cap = Rational(d - position + 1) * beta;
        return alpha < cap ? alpha : cap;
    }

    std::string describe() const {
        std::string name = which == Proposition::RowUpper ? "row" : "column";
        return name + " r=" + std::to_string(r) + " ell=" + std::to_string(ell) +
               " p=" + std::to_string(p) + " d=" + std::to_string(d) +
               " k=" + std::to_string(k) + " beta=" + to_fraction_string(beta) +
               " theta=" + to_fraction_string(theta) + " eps=" + to_fraction_string(epsilon);
    }
};

inline LPProblem build_prop2_instance(const PropInstance& inst) {
    inst.validate();
    if (inst.which != Proposition::RowUpper)
        throw std::domain_error("build_prop2_instance wants a row instance");
    const long long r = inst.r, ell = inst.ell;

    std::vector<std::string> labels{"Wm"};
    for (long long i = 1; i <= r; ++i) labels.push_back("W" + std::to_string(i));
    for (long long i = 1; i <= ell; ++i) labels.push_back("S" + std::to_string(i));
    VarSet vars(labels);

    LPProblem problem = standard_problem(vars.size(), Sense::Max);

    const SubsetMask wm = vars.mask_of("Wm");
    auto w = [&](long long i) { return vars.mask_of("W" + std::to_string(i)); };
    auto s = [&](long long i) { return vars.mask_of("S" + std::to_string(i)); };
    SubsetMask w_all = 0, s_all = 0;
    for (long long i = 1; i <= r; ++i) w_all |= w(i);
    for (long long i = 1; i <= ell; ++i) s_all |= s(i);

    for (long long i = 1; i <= ell; ++i)
        problem.add_le(EntropyExpr::entropy(s(i)), inst.beta);
    functional_dependency(problem, s_all, wm);
    problem.add_le(EntropyExpr::entropy(wm), inst.alpha);
    for (long long i = 1; i <= r; ++i)
        problem.add_le(EntropyExpr::entropy(w(i)), inst.alpha);
    for (long long i = 1; i <= ell; ++i)
        problem.add_le(EntropyExpr::conditional(w(i), s(i) | (w_all & ~w(i))),
                       Rational(inst.d - r) * inst.beta);
    for (long long i = 1; i <= ell; ++i)
        problem.add_ge(EntropyExpr::conditional(w(i), w_all & ~w(i)),
                       inst.cut_floor(r) - inst.epsilon);
    Rational joint_floor = 0;
    for (long long t = 1; t <= r + 1; ++t) joint_floor += inst.cut_floor(t);
    problem.add_ge(EntropyExpr::entropy(wm | w_all), joint_floor - inst.epsilon);

    problem.objective = EntropyExpr::entropy(s_all);
    problem.sense = Sense::Max;
    return problem;
}

inline LPProblem build_prop1_instance(const PropInstance& inst) {
    inst.validate();
    if (inst.which != Proposition::ColumnLower)
        throw std::domain_error("build_prop1_instance wants a column instance");

    std::vector<std::string> labels;
    if (inst.r > 0) labels.push_back("WA");
    labels.push_back("WL");
    labels.push_back("S");
    VarSet vars(labels);

    LPProblem problem = standard_problem(vars.size(), Sense::Min);
    const SubsetMask wa = inst.r > 0 ? vars.mask_of("WA") : 0;
    const SubsetMask wl = vars.mask_of("WL");
    const SubsetMask sv = vars.mask_of("S");

    functional_dependency(problem, wl, sv | wa);
    Rational floor_sum = 0;
    for (long long t = inst.r + 1; t <= inst.r + inst.ell; ++t) floor_sum += inst.cut_floor(t);
    problem.add_ge(EntropyExpr::conditional(wl, wa), floor_sum - inst.epsilon);

    problem.objective = EntropyExpr::entropy(sv);
    problem.sense = Sense::Min;
    return problem;
}

// The closed-form side each proposition asserts.
inline Rational proposition_rhs(const PropInstance& inst) {
    inst.validate();
    if (inst.which == Proposition::RowUpper) {
        if (inst.r == inst.p)
            return inst.beta + Rational(inst.ell - 1) * inst.theta +
                   Rational(inst.ell) * inst.epsilon;
        return 2 * inst.beta - inst.theta + Rational(inst.ell) * inst.epsilon;
    }
    Rational floor_sum = 0;
    for (long long t = inst.r + 1; t <= inst.r + inst.ell; ++t) floor_sum += inst.cut_floor(t);
    return floor_sum - inst.epsilon;
}

struct PropositionReport {
    PropInstance instance;
    LPStatus status = LPStatus::Infeasible;
    Rational lp_value;
    Rational closed_form;
    bool holds = false;
    bool certificate_ok = false;
    Rational slack;  // how far the LP optimum sits from the closed form
};

inline PropositionReport verify_proposition(const PropInstance& inst) {
    PropositionReport report;
    report.instance = inst;
    report.closed_form = proposition_rhs(inst);
    LPProblem problem = inst.which == Proposition::RowUpper ? build_prop2_instance(inst)
                                                            : build_prop1_instance(inst);
    LPSolution sol = solve(problem);
    report.status = sol.status;
    if (sol.status != LPStatus::Optimal) return report;
    report.lp_value = *sol.value;
    report.certificate_ok = verify_certificate(problem, sol);
    if (inst.which == Proposition::RowUpper) {
        report.holds = report.lp_value <= report.closed_form;
        report.slack = report.closed_form - report.lp_value;
    } else {
        report.holds = report.lp_value >= report.closed_form;
        report.slack = report.lp_value - report.closed_form;
    }
    return report;
}

}  // namespace rgc::lp
