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

#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rgc/bounds.hpp"
#include "rgc/propositions.hpp"
#include "rgc/repair_matrix.hpp"

// Grid runners for the cross-checks the CLI `verify` command exposes:
//   identities  - Table-style closed forms against the repair-matrix
//                 derivation, as coefficient identities and on a theta grid
//   rowsum      - the arithmetic-series identity behind the case sums
//   props       - LP certification of the row/column entropy propositions
// Instances are independent, so the LP grid may fan out over threads; results
// are gathered in instance order either way.

namespace rgc {

struct SuiteReport {
    long long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct IdentityOptions {
    long long max_k = 8;
    long long d_spread = 4;  // d ranges over k..k+d_spread
    long long theta_steps = 8;
    Rational beta = Rational(8);
    std::optional<Rational> fault;  // test hook: perturbs one closed-form coefficient
};

inline SuiteReport run_identity_suite(const IdentityOptions& opt = {}) {
    SuiteReport report;
    auto check = [&](const CodeParams& params, long long p, const EpsilonForm& closed_in,
                     const repair::RegionSpec& region, const char* what) {
        EpsilonForm closed = closed_in;
        if (opt.fault) closed.theta_coef += *opt.fault;
        EpsilonForm oracle = repair::solve_epsilon_form(region);
        bool form_equal =
            closed.beta_coef == oracle.beta_coef && closed.theta_coef == oracle.theta_coef;
        for (long long t = 0; t < opt.theta_steps; ++t) {
            Rational theta = opt.beta * t / opt.theta_steps;
            ++report.checked;
            Rational lhs = closed.eval(opt.beta, theta);
            Rational rhs = repair::solve_epsilon(region, opt.beta, theta);
            if (lhs != rhs || !form_equal) {
                std::ostringstream msg;
                msg << what << " mismatch at k=" << params.k << " d=" << params.d
                    << " p=" << p << " beta=" << to_fraction_string(opt.beta)
                    << " theta=" << to_fraction_string(theta) << ": closed form "
                    << to_fraction_string(lhs) << " vs region " << to_fraction_string(rhs);
                report.failures.push_back(msg.str());
                return;
            }
        }
    };

    for (long long k = 3; k <= opt.max_k; ++k) {
        for (long long d = k; d <= k + opt.d_spread; ++d) {
            CodeParams params{d + 1, k, d};
            for (long long p = 2; p <= k - 1; ++p)
                check(params, p, epsilon0_form(params, p),
                      repair::build_region(params, p, repair::case_for_eps0(params, p)),
                      "eps0");
            for (long long p = 1; p <= k - 2; ++p)
                check(params, p, epsilon1_form(params, p),
                      repair::build_region(params, p, repair::case_for_eps1(params, p)),
                      "eps1");
        }
    }
    return report;
}

inline SuiteReport run_rowsum_suite() {
    SuiteReport report;
    for (long long q = 1; q <= 6; ++q) {
        for (long long p_eff = 1; p_eff <= 6; ++p_eff) {
            for (long long dp1 = p_eff * (q + 1); dp1 <= 20; ++dp1) {
                ++report.checked;
                auto [lhs, rhs] = repair::row_sum_identity(dp1 - 1, p_eff, q);
                if (lhs != rhs) {
                    std::ostringstream msg;
                    msg << "row-sum identity broken at d=" << dp1 - 1 << " p_eff=" << p_eff
                        << " q=" << q << ": " << to_fraction_string(lhs)
                        << " != " << to_fraction_string(rhs);
                    report.failures.push_back(msg.str());
                }
            }
        }
    }
    return report;
}

struct PropSuiteOptions {
    long long max_d = 5;
    long long theta_steps = 4;
    long long max_ell = 2;
    std::vector<Rational> eps_values = {Rational(0), Rational(1, 10)};  // fractions of beta
    Rational beta = Rational(8);
    unsigned jobs = 0;  // 0 = hardware concurrency
};

struct PropSuiteReport : SuiteReport {
    long long row_instances = 0;
    long long column_instances = 0;
    long long certified = 0;              // optima with verified dual recombination
    std::optional<Rational> min_slack;    // tightest row-bound slack seen (diagnostic)
};

inline std::vector<lp::PropInstance> prop_suite_instances(const PropSuiteOptions& opt) {
    std::vector<lp::PropInstance> instances;
    for (long long p : {2LL, 3LL}) {
        long long k = p + 2;
        for (long long d = k; d <= opt.max_d; ++d) {
            for (long long r : {p, p + 1}) {
                for (long long ell = 2; ell <= std::min(r, opt.max_ell); ++ell) {
                    for (long long t = 0; t < opt.theta_steps; ++t) {
                        for (const Rational& frac : opt.eps_values) {
                            lp::PropInstance inst;
                            inst.which = lp::Proposition::RowUpper;
                            inst.p = p;
                            inst.k = k;
                            inst.d = d;
                            inst.r = r;
                            inst.ell = ell;
                            inst.beta = opt.beta;
                            inst.theta = opt.beta * t / opt.theta_steps;
                            inst.alpha = Rational(d - p + 1) * opt.beta - inst.theta;
                            inst.epsilon = frac * opt.beta;
                            instances.push_back(inst);
                        }
                    }
                }
            }
        }
    }
    // column instances: cheap three-block LPs across |A| and |L| splits
    for (long long p : {1LL, 2LL}) {
        long long k = 4;
        for (long long d = k; d <= std::max(opt.max_d, k); ++d) {
            for (long long a = 0; a <= 2; ++a) {
                for (long long ell = 1; ell <= 2 && a + ell <= k; ++ell) {
                    for (long long t : {0LL, 1LL}) {
                        for (const Rational& frac : opt.eps_values) {
                            lp::PropInstance inst;
                            inst.which = lp::Proposition::ColumnLower;
                            inst.p = p;
                            inst.k = k;
                            inst.d = d;
                            inst.r = a;
                            inst.ell = ell;
                            inst.beta = opt.beta;
                            inst.theta = opt.beta * t / 4;
                            inst.alpha = Rational(d - p + 1) * opt.beta - inst.theta;
                            inst.epsilon = frac * opt.beta;
                            instances.push_back(inst);
                        }
                    }
                }
            }
        }
    }
    return instances;
}

inline PropSuiteReport run_prop_suite(const PropSuiteOptions& opt = {}) {
    const std::vector<lp::PropInstance> instances = prop_suite_instances(opt);
    std::vector<lp::PropositionReport> reports(instances.size());

    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, instances.size() ? instances.size() : 1);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            reports[i] = lp::verify_proposition(instances[i]);
    } else {
        std::vector<std::future<void>> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w]() {
                for (std::size_t i = w; i < instances.size(); i += jobs)
                    reports[i] = lp::verify_proposition(instances[i]);
            }));
        }
        for (auto& f : workers) f.get();
    }

    PropSuiteReport report;
    for (const lp::PropositionReport& r : reports) {
        ++report.checked;
        if (r.instance.which == lp::Proposition::RowUpper) {
            ++report.row_instances;
            if (r.status == lp::LPStatus::Optimal &&
                (!report.min_slack || r.slack < *report.min_slack))
                report.min_slack = r.slack;
        } else {
            ++report.column_instances;
        }
        if (r.certificate_ok) ++report.certified;
        if (r.status != lp::LPStatus::Optimal || !r.holds || !r.certificate_ok) {
            std::ostringstream msg;
            msg << "proposition check failed for " << r.instance.describe();
            if (r.status != lp::LPStatus::Optimal)
                msg << " (LP not optimal)";
            else
                msg << ": lp " << to_fraction_string(r.lp_value) << " vs closed form "
                    << to_fraction_string(r.closed_form)
                    << (r.certificate_ok ? "" : " [certificate failed]");
            report.failures.push_back(msg.str());
        }
    }
    return report;
}

}  // namespace rgc
