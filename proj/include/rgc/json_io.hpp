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

#include <json.hpp>

#include "rgc/bounds.hpp"

// JSON views of the bound results. Rationals cross the boundary as exact
// "num/den" strings, never as decimals.

namespace rgc {

inline nlohmann::json bound_result_to_json(const BoundResult& r) {
    nlohmann::json j;
    j["b_cutset"] = to_fraction_string(r.b_cutset);
    j["b_functional"] = to_fraction_string(r.b_functional);
    j["b_exact"] = to_fraction_string(r.b_exact);
    j["eps0"] = r.eps0 ? nlohmann::json(to_fraction_string(*r.eps0)) : nlohmann::json(nullptr);
    j["eps1"] = r.eps1 ? nlohmann::json(to_fraction_string(*r.eps1)) : nlohmann::json(nullptr);
    j["q0"] = r.q0 ? nlohmann::json(*r.q0) : nlohmann::json(nullptr);
    j["q1"] = r.q1 ? nlohmann::json(*r.q1) : nlohmann::json(nullptr);
    j["regime"] = regime_name(r.regime);
    j["improved"] = r.improved;
    j["clamped"] = r.clamped;
    return j;
}

inline BoundResult bound_result_from_json(const nlohmann::json& j) {
    BoundResult r;
    r.b_cutset = parse_rational_or_throw(j.at("b_cutset").get<std::string>());
    r.b_functional = parse_rational_or_throw(j.at("b_functional").get<std::string>());
    r.b_exact = parse_rational_or_throw(j.at("b_exact").get<std::string>());
    if (!j.at("eps0").is_null())
        r.eps0 = parse_rational_or_throw(j.at("eps0").get<std::string>());
    if (!j.at("eps1").is_null())
        r.eps1 = parse_rational_or_throw(j.at("eps1").get<std::string>());
    if (!j.at("q0").is_null()) r.q0 = j.at("q0").get<long long>();
    if (!j.at("q1").is_null()) r.q1 = j.at("q1").get<long long>();
    auto regime = regime_from_name(j.at("regime").get<std::string>());
    if (!regime) throw std::invalid_argument("unknown regime name in JSON");
    r.regime = *regime;
    r.improved = j.at("improved").get<bool>();
    r.clamped = j.at("clamped").get<bool>();
    return r;
}

}  // namespace rgc
