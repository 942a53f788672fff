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
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace rgc {

// All bound arithmetic is exact; no floating point anywhere in the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline Integer rational_floor(const Rational& r) {
    Integer q, rem;
    boost::multiprecision::divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && r < 0) --q;
    return q;
}

inline Integer rational_ceil(const Rational& r) { return -rational_floor(-r); }

// Parses "num", "num/den" or a plain decimal like "2.25" into an exact
// rational. Returns nullopt on anything else (no exponents, no whitespace).
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    if (pos >= s.size()) return std::nullopt;

    auto all_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    // GMP's string constructor reads a leading zero as octal; strip them
    auto as_integer = [](std::string_view v) {
        std::size_t i = 0;
        while (i + 1 < v.size() && v[i] == '0') ++i;
        return Integer{std::string(v.substr(i))};
    };

    std::string_view body(s.data() + pos, s.size() - pos);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        Integer d = as_integer(den);
        if (d == 0) return std::nullopt;
        value = Rational(as_integer(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Integer num = as_integer(ip) * scale + as_integer(fp);
        value = Rational(num, scale);
    } else {
        if (!all_digits(body)) return std::nullopt;
        value = Rational(as_integer(body));
    }
    return negative ? Rational(-value) : value;
}

inline Rational parse_rational_or_throw(std::string_view text) {
    auto r = parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return *r;
}

// Canonical exact form: "num/den", or just "num" for integers.
inline std::string to_fraction_string(const Rational& r) { return r.str(); }

// Exact decimal rendering with round-half-away-from-zero at `frac_digits`,
// trailing zeros trimmed. Used for the CSV/SVG outputs so identical inputs
// always produce identical bytes.
inline std::string to_decimal_string(const Rational& r, unsigned frac_digits) {
    Integer scale = 1;
    for (unsigned i = 0; i < frac_digits; ++i) scale *= 10;
    Integer num = numerator(r) * scale;
    Integer den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    Integer q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem * 2 >= den) ++q;

    std::string digits = q.str();
    std::string out;
    if (digits.size() <= frac_digits) digits.insert(0, frac_digits - digits.size() + 1, '0');
    std::string ip = digits.substr(0, digits.size() - frac_digits);
    std::string fp = frac_digits ? digits.substr(digits.size() - frac_digits) : "";
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
    out = ip;
    if (!fp.empty()) out += "." + fp;
    if (negative && (out.find_first_not_of("0.") != std::string::npos)) out.insert(0, 1, '-');
    return out;
}

}  // namespace rgc
