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

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/rational.hpp"

namespace rgc::lp {

constexpr int kMaxVariables = 12;

using SubsetMask = std::uint32_t;

// Named atomic random variables; subsets are addressed by bitmask over the
// label order. A label may stand for an aggregate block that a proof only
// ever uses jointly.
struct VarSet {
    std::vector<std::string> labels;

    explicit VarSet(std::vector<std::string> names) : labels(std::move(names)) {
        if (labels.empty() || labels.size() > kMaxVariables)
            throw std::domain_error("variable set size must be in 1..12");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::domain_error("variable labels must be unique");
    }

    int size() const { return static_cast<int>(labels.size()); }
    SubsetMask full_mask() const { return (SubsetMask{1} << labels.size()) - 1; }

    SubsetMask mask_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return SubsetMask{1} << i;
        throw std::domain_error("unknown variable label: " + label);
    }

    SubsetMask mask_of(const std::vector<std::string>& names) const {
        SubsetMask m = 0;
        for (const auto& name : names) m |= mask_of(name);
        return m;
    }

    std::string describe(SubsetMask mask) const {
        std::string out;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (mask & (SubsetMask{1} << i)) {
                if (!out.empty()) out += ",";
                out += labels[i];
            }
        return out;
    }
};

// A linear combination of joint entropies H(subset), plus a constant. Kept
// canonical: zero coefficients are dropped, keys sorted by mask.
class EntropyExpr {
  public:
    EntropyExpr() = default;

    static EntropyExpr entropy(SubsetMask subset) {
        EntropyExpr e;
        e.add_term(subset, 1);
        return e;
    }

    // H(A | B) = H(A u B) - H(B); B may be empty.
    static EntropyExpr conditional(SubsetMask a, SubsetMask b) {
        EntropyExpr e;
        e.add_term(a | b, 1);
        e.add_term(b, -1);
        return e;
    }

    // I(A ; B | C) = H(A u C) + H(B u C) - H(A u B u C) - H(C).
    static EntropyExpr mutual(SubsetMask a, SubsetMask b, SubsetMask c = 0) {
        EntropyExpr e;
        e.add_term(a | c, 1);
        e.add_term(b | c, 1);
        e.add_term(a | b | c, -1);
        e.add_term(c, -1);
        return e;
    }

    void add_term(SubsetMask subset, const Rational& coef) {
        if (subset == 0) return;  // H(empty) = 0 contributes nothing
        auto it = terms_.find(subset);
        if (it == terms_.end()) {
            if (coef != 0) terms_.emplace(subset, coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_constant(const Rational& c) { constant_ += c; }

    EntropyExpr& operator+=(const EntropyExpr& other) {
        for (const auto& [mask, coef] : other.terms_) add_term(mask, coef);
        constant_ += other.constant_;
        return *this;
    }

    EntropyExpr& operator-=(const EntropyExpr& other) {
        for (const auto& [mask, coef] : other.terms_) add_term(mask, -coef);
        constant_ -= other.constant_;
        return *this;
    }

    EntropyExpr& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            constant_ = 0;
            return *this;
        }
        for (auto& [mask, coef] : terms_) coef *= s;
        constant_ *= s;
        return *this;
    }

    friend EntropyExpr operator+(EntropyExpr a, const EntropyExpr& b) { return a += b; }
    friend EntropyExpr operator-(EntropyExpr a, const EntropyExpr& b) { return a -= b; }
    friend EntropyExpr operator*(EntropyExpr a, const Rational& s) { return a *= s; }

    const std::map<SubsetMask, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }
    bool empty() const { return terms_.empty() && constant_ == 0; }
    SubsetMask max_mask() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    Rational coefficient(SubsetMask subset) const {
        auto it = terms_.find(subset);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Stable text key; doubles as the serialized term list.
    std::string key() const {
        std::string out;
        if (constant_ != 0) out += signed_fraction(constant_) + "@0";
        for (const auto& [mask, coef] : terms_) {
            if (!out.empty()) out += " ";
            out += signed_fraction(coef) + "@" + std::to_string(mask);
        }
        return out;
    }

    friend bool operator==(const EntropyExpr&, const EntropyExpr&) = default;

  private:
    static std::string signed_fraction(const Rational& r) {
        std::string s = to_fraction_string(r);
        if (!s.empty() && s[0] != '-') s.insert(0, 1, '+');
        return s;
    }

    std::map<SubsetMask, Rational> terms_;
    Rational constant_ = 0;
};

}  // namespace rgc::lp
