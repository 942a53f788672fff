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

#include "rgc/rational.hpp"

using namespace rgc;

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
    CHECK(*parse_rational("3/4") == make_rational(3, 4));
    CHECK(*parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(*parse_rational("+6/8") == make_rational(3, 4));  // canonicalized
    CHECK(*parse_rational("17") == make_rational(17));
    CHECK(*parse_rational("2.25") == make_rational(9, 4));
    CHECK(*parse_rational("-0.5") == make_rational(-1, 2));
    CHECK(*parse_rational("0") == Rational(0));
    // leading zeros must not trigger octal interpretation
    CHECK(*parse_rational("0.083333333") == make_rational(83333333, 1000000000));
    CHECK(*parse_rational("007") == make_rational(7));
    CHECK(*parse_rational("08/012") == make_rational(2, 3));
}

TEST_CASE("rational parsing rejects junk") {
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("a/b"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1e3"));
    CHECK_FALSE(parse_rational("1/2/3"));
    CHECK_FALSE(parse_rational(" 1"));
    CHECK_FALSE(parse_rational("1.2.3"));
    CHECK_THROWS_AS(parse_rational_or_throw("x"), std::invalid_argument);
}

TEST_CASE("fraction strings are canonical") {
    CHECK(to_fraction_string(make_rational(50, 3)) == "50/3");
    CHECK(to_fraction_string(make_rational(6)) == "6");
    CHECK(to_fraction_string(make_rational(-4, 8)) == "-1/2");
}

TEST_CASE("decimal rendering is exact and trimmed") {
    CHECK(to_decimal_string(make_rational(9, 2), 9) == "4.5");
    CHECK(to_decimal_string(make_rational(50, 3), 6) == "16.666667");
    CHECK(to_decimal_string(make_rational(-1, 4), 4) == "-0.25");
    CHECK(to_decimal_string(Rational(0), 9) == "0");
    CHECK(to_decimal_string(make_rational(1), 3) == "1");
    CHECK(to_decimal_string(make_rational(1, 3), 3) == "0.333");
    CHECK(to_decimal_string(make_rational(2, 3), 3) == "0.667");
}

TEST_CASE("floor and ceil") {
    CHECK(rational_floor(make_rational(7, 2)) == 3);
    CHECK(rational_floor(make_rational(-7, 2)) == -4);
    CHECK(rational_floor(make_rational(4)) == 4);
    CHECK(rational_ceil(make_rational(7, 2)) == 4);
    CHECK(rational_ceil(make_rational(-7, 2)) == -3);
}
