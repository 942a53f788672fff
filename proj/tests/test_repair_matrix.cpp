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

#include <catch2/catch_amalgamated.hpp>

#include "rgc/repair_matrix.hpp"
#include "rgc/verification.hpp"

using namespace rgc;
using namespace rgc::repair;

namespace {
const CodeParams k433{4, 3, 3};
const CodeParams k544{5, 4, 4};

CellSet cells(std::initializer_list<std::pair<long long, long long>> list) {
    CellSet out;
    for (auto [x, y] : list) out.insert(RepairSymbol{x, y});
    return out;
}
}  // namespace

TEST_CASE("case 1a region for (4,3,3), p = 2") {
    RegionSpec region = build_region(k433, 2, ProofCase::C1a);
    CHECK(region.q == 1);
    CHECK(region.cells == cells({{3, 2}, {4, 2}, {4, 3}}));
    REQUIRE(region.groups.size() == 1);
    CHECK(region.groups[0].rect == cells({{4, 2}, {4, 3}}));
    CHECK(region.groups[0].triangle == cells({{3, 2}}));
}

TEST_CASE("case 2a region for (4,3,3), p = 1 covers the same trapezium") {
    RegionSpec region = build_region(k433, 1, ProofCase::C2a);
    CHECK(region.q == 1);
    CHECK(region.cells == cells({{3, 2}, {4, 2}, {4, 3}}));
    CHECK(region.groups[0].rect == cells({{4, 2}, {4, 3}}));
    CHECK(region.groups[0].triangle == cells({{3, 2}}));
}

TEST_CASE("triangle and rectangle cardinalities follow the case shapes") {
    for (long long k = 3; k <= 8; ++k) {
        for (long long d = k; d <= 12; ++d) {
            CodeParams params{d + 1, k, d};
            for (long long p = 2; p <= k - 1; ++p) {
                if (q0_of(params, p) >= 1) {
                    RegionSpec region = build_region(params, p, ProofCase::C1a);
                    for (std::size_t i = 0; i < region.groups.size(); ++i) {
                        const RegionGroup& g = region.groups[i];
                        long long rows = d - (static_cast<long long>(i) + 2) * p + 2;
                        CHECK(static_cast<long long>(g.rect.size()) == p * rows);
                        CHECK(static_cast<long long>(g.triangle.size()) == p * (p - 1) / 2);
                    }
                } else {
                    RegionSpec region = build_region(params, p, ProofCase::C1b);
                    REQUIRE(region.groups.size() == 1);
                    CHECK(static_cast<long long>(region.groups[0].rect.size()) ==
                          (k - p + 1) * (d - k + 1));
                    CHECK(static_cast<long long>(region.groups[0].triangle.size()) ==
                          (k - p) * (k - p + 1) / 2);
                }
            }
            for (long long p = 1; p <= k - 2; ++p) {
                if (q1_of(params, p) >= 1) {
                    RegionSpec region = build_region(params, p, ProofCase::C2a);
                    for (std::size_t i = 0; i < region.groups.size(); ++i) {
                        const RegionGroup& g = region.groups[i];
                        long long rows = d - (static_cast<long long>(i) + 2) * (p + 1) + 2;
                        CHECK(static_cast<long long>(g.rect.size()) == (p + 1) * rows);
                        CHECK(static_cast<long long>(g.triangle.size()) == (p + 1) * p / 2);
                    }
                } else {
                    RegionSpec region = build_region(params, p, ProofCase::C2b);
                    CHECK(static_cast<long long>(region.groups[0].rect.size()) ==
                          (k - p) * (d - k + 1));
                    CHECK(static_cast<long long>(region.groups[0].triangle.size()) ==
                          (k - p - 1) * (k - p) / 2);
                }
            }
        }
    }
}

TEST_CASE("groups partition the region cells") {
    for (long long k = 3; k <= 8; ++k) {
        for (long long d = k; d <= 12; ++d) {
            CodeParams params{d + 1, k, d};
            auto check_partition = [&](const RegionSpec& region) {
                CellSet unioned;
                std::size_t total = 0;
                for (const RegionGroup& g : region.groups) {
                    for (const RepairSymbol& c : g.rect) unioned.insert(c);
                    for (const RepairSymbol& c : g.triangle) unioned.insert(c);
                    total += g.rect.size() + g.triangle.size();
                    CellSet overlap;
                    for (const RepairSymbol& c : g.rect)
                        if (g.triangle.count(c)) overlap.insert(c);
                    CHECK(overlap.empty());
                }
                CHECK(unioned == region.cells);
                CHECK(total == region.cells.size());  // pairwise disjoint overall
                for (const RepairSymbol& c : region.cells) CHECK(c.x != c.y);
            };
            for (long long p = 2; p <= k - 1; ++p)
                check_partition(build_region(params, p, case_for_eps0(params, p)));
            for (long long p = 1; p <= k - 2; ++p)
                check_partition(build_region(params, p, case_for_eps1(params, p)));
        }
    }
}

TEST_CASE("case preconditions are enforced") {
    // (4,3,3): q0(p=2) = 1, so C1b is a mismatch; q1(p=1) = 1, so C2b mismatches
    CHECK_THROWS_WITH(build_region(k433, 2, ProofCase::C1b),
                      Catch::Matchers::ContainsSubstring("case mismatch"));
    CHECK_THROWS_WITH(build_region(k433, 1, ProofCase::C2b),
                      Catch::Matchers::ContainsSubstring("case mismatch"));
    // (5,4,4): q0(p=3) = 0, so C1a mismatches
    CHECK_THROWS_WITH(build_region(k544, 3, ProofCase::C1a),
                      Catch::Matchers::ContainsSubstring("case mismatch"));
    // p out of domain
    CHECK_THROWS_AS(build_region(k433, 1, ProofCase::C1a), std::domain_error);
    CHECK_THROWS_AS(build_region(k433, 3, ProofCase::C2a), std::domain_error);
}

TEST_CASE("exactly one proof case applies per epsilon and p") {
    for (long long k = 3; k <= 8; ++k) {
        CodeParams params{k + 1, k, k};
        for (long long p = 2; p <= k - 1; ++p) {
            ProofCase chosen = case_for_eps0(params, p);
            ProofCase other = chosen == ProofCase::C1a ? ProofCase::C1b : ProofCase::C1a;
            CHECK_NOTHROW(build_region(params, p, chosen));
            CHECK_THROWS_AS(build_region(params, p, other), std::domain_error);
        }
        for (long long p = 1; p <= k - 2; ++p) {
            ProofCase chosen = case_for_eps1(params, p);
            ProofCase other = chosen == ProofCase::C2a ? ProofCase::C2b : ProofCase::C2a;
            CHECK_NOTHROW(build_region(params, p, chosen));
            CHECK_THROWS_AS(build_region(params, p, other), std::domain_error);
        }
    }
}

TEST_CASE("upper bound forms rebuilt from cells") {
    // (4,3,3) p=2 case 1a: one single-row rectangle plus one beta cell
    LinearForm u = upper_bound_form(build_region(k433, 2, ProofCase::C1a));
    CHECK(u == LinearForm{make_rational(2), make_rational(1), make_rational(2)});

    // (4,3,3) p=1 case 2a: 2beta - theta + 2eps plus one beta cell
    u = upper_bound_form(build_region(k433, 1, ProofCase::C2a));
    CHECK(u == LinearForm{make_rational(3), make_rational(-1), make_rational(2)});

    // (5,4,4) p=3 case 1b
    u = upper_bound_form(build_region(k544, 3, ProofCase::C1b));
    CHECK(u == LinearForm{make_rational(2), make_rational(1), make_rational(2)});
}

TEST_CASE("lower bound forms over the region columns") {
    LinearForm l = lower_bound_form(build_region(k433, 2, ProofCase::C1a));
    CHECK(l == LinearForm{make_rational(3), make_rational(-1), make_rational(-1)});

    l = lower_bound_form(build_region(k433, 1, ProofCase::C2a));
    CHECK(l == LinearForm{make_rational(3), make_rational(0), make_rational(-1)});

    l = lower_bound_form(build_region(k544, 3, ProofCase::C1b));
    CHECK(l == LinearForm{make_rational(3), make_rational(-1), make_rational(-1)});
}

TEST_CASE("solve_epsilon matches the closed forms on the worked examples") {
    Rational beta = make_rational(9);
    for (int t = 0; t < 9; ++t) {
        Rational theta = beta * t / 9;
        CHECK(solve_epsilon(build_region(k433, 2, ProofCase::C1a), beta, theta) ==
              (beta - 2 * theta) / 3);
        CHECK(solve_epsilon(build_region(k433, 1, ProofCase::C2a), beta, theta) == theta / 3);
        CHECK(solve_epsilon(build_region(k544, 3, ProofCase::C1b), beta, theta) ==
              (beta - 2 * theta) / 3);
    }
    CHECK_THROWS_AS(
        solve_epsilon(build_region(k433, 2, ProofCase::C1a), beta, beta),
        std::domain_error);
}

TEST_CASE("region-derived epsilon agrees with the table forms identically in theta") {
    SuiteReport report = run_identity_suite();
    CHECK(report.checked >= 1500);
    CHECK(report.failures.empty());
}

TEST_CASE("fault injection is detected by the identity suite") {
    IdentityOptions opt;
    opt.fault = make_rational(1, 1000000);
    SuiteReport report = run_identity_suite(opt);
    CHECK_FALSE(report.failures.empty());
}

TEST_CASE("row-sum identity") {
    auto [lhs1, rhs1] = row_sum_identity(3, 2, 1);
    CHECK(lhs1 == make_rational(1));
    CHECK(rhs1 == make_rational(1));

    auto [lhs2, rhs2] = row_sum_identity(10, 2, 3);  // 8 + 6 + 4
    CHECK(lhs2 == make_rational(18));
    CHECK(lhs2 == rhs2);

    for (long long d = 2; d <= 19; ++d)
        for (long long p = 1; 2 * p <= d + 1; ++p) {
            auto [lhs, rhs] = row_sum_identity(d, p, 1);
            CHECK(lhs == Rational(d - 2 * p + 2));
            CHECK(lhs == rhs);
        }

    SuiteReport grid = run_rowsum_suite();
    CHECK(grid.checked > 100);
    CHECK(grid.failures.empty());

    CHECK_THROWS_AS(row_sum_identity(5, 2, 0), std::domain_error);
}

TEST_CASE("region rendering") {
    RegionSpec region = build_region(k433, 2, ProofCase::C1a);
    std::string grid = render_region(region);
    CHECK(grid ==
          "\\ . . .\n"
          ". \\ . .\n"
          ". T \\ .\n"
          ". R R \\\n");

    long long marked = 0;
    for (char c : grid)
        if (c == 'R' || c == 'T') ++marked;
    CHECK(marked == static_cast<long long>(region.cells.size()));

    CodeParams big{41, 3, 40};
    CHECK_THROWS_AS(render_region(build_region(big, 2, case_for_eps0(big, 2))),
                    std::domain_error);
}
