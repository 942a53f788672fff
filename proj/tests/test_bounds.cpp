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

#include <random>

#include "rgc/bounds.hpp"

using namespace rgc;

namespace {
const CodeParams k433{4, 3, 3};
const CodeParams k544{5, 4, 4};

OperatingPoint pt(long long alpha_num, long long alpha_den, long long beta_num,
                  long long beta_den = 1) {
    return OperatingPoint{make_rational(alpha_num, alpha_den), make_rational(beta_num, beta_den)};
}
}  // namespace

TEST_CASE("cut-set bound evaluates the min-sum directly") {
    CHECK(cut_set_bound(k433, pt(2, 1, 1)) == make_rational(5));  // 2 + 2 + 1
    CHECK(cut_set_bound(k433, pt(3, 1, 1)) == make_rational(6));  // 3 + 2 + 1 at MBR
    CHECK(cut_set_bound(k433, pt(1, 1, 1)) == make_rational(3));  // k * alpha
}

TEST_CASE("cut-set bound validates inputs") {
    CHECK_THROWS_AS(cut_set_bound(CodeParams{4, 3, 5}, pt(1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(cut_set_bound(k433, OperatingPoint{Rational(1), Rational(0)}),
                    std::domain_error);
}

TEST_CASE("regime conversion inverts alpha = (d-p+1)beta - theta") {
    RegimeCoordinates rc = to_regime(k433, pt(8, 1, 3));
    CHECK(rc.p == 1);
    CHECK(rc.theta == make_rational(1));

    rc = to_regime(k433, pt(9, 1, 3));  // MBR point
    CHECK(rc.p == 1);
    CHECK(rc.theta == 0);

    rc = to_regime(CodeParams{5, 3, 4}, pt(2, 1, 1));  // MSR point
    CHECK(rc.p == 3);
    CHECK(rc.theta == 0);
}

TEST_CASE("regime conversion rejects out-of-range alpha and names the interval") {
    CHECK_THROWS_WITH(to_regime(k433, pt(10, 1, 3)),
                      Catch::Matchers::ContainsSubstring("(0, 9]"));
    CHECK_THROWS_WITH(to_regime(CodeParams{6, 3, 5}, pt(2, 1, 1)),
                      Catch::Matchers::ContainsSubstring("(2, 5]"));
    CHECK_THROWS_AS(to_regime(CodeParams{6, 3, 5}, pt(1, 1, 1)), std::domain_error);
}

TEST_CASE("regime round-trip is the identity on random in-range points") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<long long> small(1, 40);
    for (int trial = 0; trial < 500; ++trial) {
        long long k = 1 + static_cast<long long>(rng() % 8);
        long long d = k + static_cast<long long>(rng() % 5);
        CodeParams params{d + 1, k, d};
        Rational beta = make_rational(small(rng), small(rng));
        long long p = 1 + static_cast<long long>(rng() % k);
        Rational theta = beta * (rng() % 16) / 16;
        OperatingPoint point = from_regime(params, RegimeCoordinates{p, theta}, beta);
        RegimeCoordinates rc = to_regime(params, point);
        CHECK(rc.p == p);
        CHECK(rc.theta == theta);
        CHECK(from_regime(params, rc, beta) == point);
    }
}

TEST_CASE("functional optimum per regime") {
    CHECK(functional_optimal_B(k433, RegimeCoordinates{1, make_rational(1)}, make_rational(3)) ==
          make_rational(17));
    CHECK(functional_optimal_B(k433, RegimeCoordinates{1, Rational(0)}, make_rational(1)) ==
          make_rational(6));  // equals cut-set at MBR
    CHECK(functional_optimal_B(k544, RegimeCoordinates{2, make_rational(3)}, make_rational(7)) ==
          make_rational(57));
}

TEST_CASE("functional optimum equals the cut-set value over the whole regime range") {
    for (long long k = 1; k <= 6; ++k) {
        for (long long d = k; d <= k + 3; ++d) {
            CodeParams params{d + 1, k, d};
            Rational beta = make_rational(5, 2);
            for (long long p = 1; p <= k; ++p) {
                for (int t = 0; t < 4; ++t) {
                    RegimeCoordinates rc{p, beta * t / 4};
                    OperatingPoint point = from_regime(params, rc, beta);
                    CHECK(functional_optimal_B(params, rc, beta) ==
                          cut_set_bound(params, point));
                }
            }
        }
    }
}

TEST_CASE("eps0 closed forms match the worked examples") {
    Rational beta = make_rational(5), theta = make_rational(2);
    // (4,3,3), p = 2: (beta - 2 theta) / 3
    CHECK(epsilon0(k433, RegimeCoordinates{2, theta}, beta) == (beta - 2 * theta) / 3);
    // (5,4,4), p = 2: (2 beta - 3 theta) / 5
    CHECK(epsilon0(k544, RegimeCoordinates{2, theta}, beta) == (2 * beta - 3 * theta) / 5);
    // (5,4,4), p = 3 at the boundary theta = beta/2: exactly zero
    CHECK(epsilon0(k544, RegimeCoordinates{3, beta / 2}, beta) == 0);

    CHECK_THROWS_AS(epsilon0_form(k433, 1), std::domain_error);
    CHECK_THROWS_AS(epsilon0_form(k433, 3), std::domain_error);
}

TEST_CASE("eps1 closed forms match the worked examples") {
    Rational beta = make_rational(7), theta = make_rational(3);
    CHECK(epsilon1(k433, RegimeCoordinates{1, theta}, beta) == theta / 3);
    CHECK(epsilon1(k544, RegimeCoordinates{1, theta}, beta) == 2 * theta / 5);
    CHECK(epsilon1(k544, RegimeCoordinates{2, theta}, beta) == theta / 3);

    CHECK_THROWS_AS(epsilon1_form(k433, 2), std::domain_error);
    CHECK_THROWS_AS(epsilon1_form(k544, 3), std::domain_error);
}

TEST_CASE("eps boundary zeros") {
    for (long long k = 3; k <= 8; ++k) {
        for (long long d = k; d <= k + 4; ++d) {
            CodeParams params{d + 1, k, d};
            Rational beta = make_rational(8);
            Rational limit = pkm1_theta_limit(params, beta);
            CHECK(epsilon0(params, RegimeCoordinates{k - 1, limit}, beta) == 0);
            CHECK(epsilon1(params, RegimeCoordinates{1, Rational(0)}, beta) == 0);
        }
    }
}

TEST_CASE("(4,3,3) improved bound sits on 3B = 4 alpha + 6 beta") {
    Rational beta = make_rational(3);
    for (int i = 1; i <= 16; ++i) {  // p = 1, 0 < theta < beta
        Rational theta = beta * i / 17;
        OperatingPoint point = from_regime(k433, RegimeCoordinates{1, theta}, beta);
        BoundResult b = exact_repair_bound(k433, point);
        CHECK(b.regime == Regime::P1);
        CHECK(3 * b.b_exact == 4 * point.alpha + 6 * beta);
        CHECK(b.improved);
    }
    for (int i = 0; i <= 15; ++i) {  // p = 2, 0 <= theta < beta/2
        Rational theta = beta * i / 33;
        OperatingPoint point = from_regime(k433, RegimeCoordinates{2, theta}, beta);
        BoundResult b = exact_repair_bound(k433, point);
        CHECK(b.regime == Regime::PKm1);
        CHECK(3 * b.b_exact == 4 * point.alpha + 6 * beta);
    }
}

TEST_CASE("(5,4,4) regime boundary at alpha/beta = 18/7 has eps0 = eps1") {
    Rational beta = make_rational(7);
    OperatingPoint point{make_rational(18), beta};  // alpha/beta = 18/7, p = 2
    BoundResult b = exact_repair_bound(k544, point);
    CHECK(b.regime == Regime::PMid);
    REQUIRE(b.eps0);
    REQUIRE(b.eps1);
    CHECK(*b.eps0 == *b.eps1);
    CHECK(*b.eps0 == make_rational(1));  // theta = 3, theta/3 = 1
    CHECK(5 * b.b_exact == 7 * point.alpha + 22 * beta);
    CHECK(3 * b.b_exact == 7 * point.alpha + 6 * beta);
}

TEST_CASE("outside the improvement regimes the functional value is returned") {
    BoundResult b = exact_repair_bound(k433, pt(9, 1, 3));  // MBR: p = 1, theta = 0
    CHECK(b.regime == Regime::NoImprovement);
    CHECK(b.b_exact == b.b_functional);
    CHECK_FALSE(b.improved);

    // k < 3 never improves
    BoundResult b2 = exact_repair_bound(CodeParams{4, 2, 3}, pt(5, 2, 1));
    CHECK(b2.regime == Regime::NoImprovement);
    CHECK_FALSE(b2.improved);

    // p = k - 1 past the theta limit
    Rational beta = make_rational(4);
    OperatingPoint near_msr = from_regime(k433, RegimeCoordinates{2, make_rational(3)}, beta);
    BoundResult b3 = exact_repair_bound(k433, near_msr);  // limit is beta/2 = 2 < 3
    CHECK(b3.regime == Regime::NoImprovement);
    CHECK(b3.b_exact == b3.b_functional);
}

TEST_CASE("alpha above d*beta clamps to the MBR value") {
    BoundResult direct = exact_repair_bound(k433, pt(9, 1, 3));
    BoundResult clamped = exact_repair_bound(k433, pt(11, 1, 3));
    CHECK(clamped.clamped);
    CHECK_FALSE(direct.clamped);
    CHECK(clamped.b_exact == direct.b_exact);
    CHECK(clamped.b_cutset == direct.b_cutset);
}

TEST_CASE("(4,3,3) bound equals 4 alpha/3 + 2 beta across both improved regimes") {
    Rational beta = make_rational(11);
    for (int i = 1; i <= 10; ++i) {
        OperatingPoint point = from_regime(k433, RegimeCoordinates{1, beta * i / 11}, beta);
        BoundResult b = exact_repair_bound(k433, point);
        CHECK(b.b_exact == 4 * point.alpha / 3 + 2 * beta);
    }
    for (int i = 0; i < 10; ++i) {
        OperatingPoint point = from_regime(k433, RegimeCoordinates{2, beta * i / 21}, beta);
        BoundResult b = exact_repair_bound(k433, point);
        CHECK(b.b_exact == 4 * point.alpha / 3 + 2 * beta);
    }
}

TEST_CASE("(5,4,4) bound equals min of the two lines on improved points") {
    Rational beta = make_rational(13);
    auto line_min = [&](const Rational& alpha) {
        Rational l1 = (7 * alpha + 22 * beta) / 5;
        Rational l2 = (7 * alpha + 6 * beta) / 3;
        return l1 < l2 ? l1 : l2;
    };
    for (long long p = 1; p <= 3; ++p) {
        for (int i = 0; i < 16; ++i) {
            Rational theta = beta * i / 16;
            OperatingPoint point = from_regime(k544, RegimeCoordinates{p, theta}, beta);
            BoundResult b = exact_repair_bound(k544, point);
            if (!b.improved) continue;
            CHECK(b.b_exact == line_min(point.alpha));
        }
    }
}

TEST_CASE("corollary gap") {
    GapResult g = corollary_gap(k433, pt(8, 1, 3));
    CHECK(g.gap == make_rational(3, 850));  // 9/50 - 3/17
    CHECK(g.regime == Regime::P1);

    CHECK(corollary_gap(k433, pt(9, 1, 3)).gap == 0);  // MBR

    // p = k-1 with theta just under the limit: tiny but positive gap
    Rational beta = make_rational(2);
    Rational theta = beta / 2 - make_rational(1, 1000);
    OperatingPoint point = from_regime(k544, RegimeCoordinates{3, theta}, beta);
    GapResult g2 = corollary_gap(k544, point);
    CHECK(g2.gap > 0);
    CHECK(g2.gap < make_rational(1, 1000));
}

TEST_CASE("normalized coordinates") {
    NormalizedPoint mbr = normalize(k433, pt(3, 1, 1), make_rational(6));
    CHECK(mbr.alpha_bar == make_rational(2));
    CHECK(mbr.gamma_bar == make_rational(2));

    NormalizedPoint msr = normalize(k433, pt(1, 1, 1), make_rational(3));
    CHECK(msr.alpha_bar == make_rational(4, 3));
    CHECK(msr.gamma_bar == make_rational(4));

    Rational lambda = make_rational(7, 3);
    NormalizedPoint scaled = normalize(
        k433, OperatingPoint{lambda * 3, lambda * 1}, lambda * 6);
    CHECK(scaled == mbr);

    CHECK_THROWS_AS(normalize(k433, pt(1, 1, 1), Rational(0)), std::domain_error);
}

TEST_CASE("extremal points") {
    ExtremalPoints ex = extremal_points(k433, make_rational(1));
    CHECK(ex.msr.point.alpha == make_rational(1));
    CHECK(ex.msr.file_size == make_rational(3));
    CHECK(ex.mbr.point.alpha == make_rational(3));
    CHECK(ex.mbr.file_size == make_rational(6));

    ExtremalPoints ex44 = extremal_points(CodeParams{5, 4, 4}, make_rational(1));
    CHECK(ex44.mbr.file_size == make_rational(10));  // 4+3+2+1

    ExtremalPoints k1 = extremal_points(CodeParams{4, 1, 3}, make_rational(2));
    CHECK(k1.msr.point == k1.mbr.point);
    CHECK(k1.msr.file_size == k1.mbr.file_size);
    CHECK(k1.msr.file_size == make_rational(6));
}

TEST_CASE("space sharing interpolates between the extremes") {
    ExtremalPoint t0 = space_sharing(k433, make_rational(1), Rational(0));
    CHECK(t0.point.alpha == make_rational(1));
    CHECK(t0.file_size == make_rational(3));
    ExtremalPoint t1 = space_sharing(k433, make_rational(1), Rational(1));
    CHECK(t1.point.alpha == make_rational(3));
    CHECK(t1.file_size == make_rational(6));
    ExtremalPoint mid = space_sharing(k433, make_rational(1), make_rational(1, 2));
    CHECK(mid.point.alpha == make_rational(2));
    CHECK(mid.file_size == make_rational(9, 2));

    CHECK_THROWS_AS(space_sharing(k433, make_rational(1), make_rational(3, 2)),
                    std::domain_error);
    CHECK_THROWS_AS(space_sharing(k433, make_rational(1), make_rational(-1, 2)),
                    std::domain_error);
}

TEST_CASE("bounds are ordered and degree-1 homogeneous on random points") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        long long k = 1 + static_cast<long long>(rng() % 8);
        long long d = k + static_cast<long long>(rng() % 5);
        CodeParams params{d + 1 + static_cast<long long>(rng() % 3), k, d};
        Rational beta = make_rational(1 + rng() % 50, 1 + rng() % 20);
        long long p = 1 + static_cast<long long>(rng() % k);
        Rational theta = beta * (rng() % 32) / 32;
        OperatingPoint point = from_regime(params, RegimeCoordinates{p, theta}, beta);
        BoundResult b = exact_repair_bound(params, point);
        CHECK(b.b_exact <= b.b_functional);
        CHECK(b.b_functional <= b.b_cutset);

        Rational lambda = make_rational(1 + rng() % 30, 1 + rng() % 30);
        BoundResult scaled = exact_repair_bound(
            params, OperatingPoint{point.alpha * lambda, beta * lambda});
        CHECK(scaled.b_cutset == lambda * b.b_cutset);
        CHECK(scaled.b_functional == lambda * b.b_functional);
        CHECK(scaled.b_exact == lambda * b.b_exact);
    }
}

TEST_CASE("strict improvement inside every theorem regime") {
    Rational beta = make_rational(8);
    for (long long k = 3; k <= 8; ++k) {
        for (long long d = k; d <= k + 4; ++d) {
            CodeParams params{d + 1, k, d};
            for (long long p = 1; p <= k; ++p) {
                for (int t = 0; t < 8; ++t) {
                    Rational theta = beta * t / 8;
                    OperatingPoint point =
                        from_regime(params, RegimeCoordinates{p, theta}, beta);
                    BoundResult b = exact_repair_bound(params, point);
                    bool in_regime =
                        (p == 1 && theta != 0) || (p >= 2 && p <= k - 2) ||
                        (p == k - 1 && theta < pkm1_theta_limit(params, beta));
                    if (in_regime) {
                        CHECK(b.improved);
                        CHECK(b.b_exact < b.b_functional);
                    } else {
                        CHECK_FALSE(b.improved);
                    }
                }
            }
        }
    }
}
