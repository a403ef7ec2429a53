// Copyright 2026 The oamwigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "oamwigner/oracle.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

/// Parses a real number that may be written in units of pi: "0.25", "pi",
/// "-pi/2", "3pi/4", "0.5*pi". Throws InvalidArgument.
double parse_real(const std::string& text);

/// {"delta": d, "coefficients": [[m, re, im], ...]}
nlohmann::json to_json(const GeneralState& state);
/// {"delta1": d1, "delta2": d2, "coefficients": [[m, n, re, im], ...]}
nlohmann::json to_json(const TwoModeState& state);

/// Accepts either layout above; a missing delta means 0. With
/// "normalize": true the coefficients are rescaled to unit norm first.
/// Throws StateParseError for malformed input and NonNormalizedState when the
/// norm is off and normalization was not requested.
std::variant<GeneralState, TwoModeState> state_from_json(const nlohmann::json& json);

std::variant<GeneralState, TwoModeState> read_state_file(const std::string& path);

nlohmann::json to_json(const SincIdentityReport& report);

}  // namespace oamwigner
