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

#include "oamwigner/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_point.hpp"

namespace oamwigner {

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

double parse_plain(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse number '" + whole + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw InvalidArgument("cannot parse number '" + whole + "'");
  }
  return value;
}

double number_at(const nlohmann::json& entry, std::size_t index) {
  const auto& x = entry.at(index);
  if (!x.is_number()) {
    throw StateParseError("coefficient entries must be numbers");
  }
  return x.get<double>();
}

int mode_at(const nlohmann::json& entry, std::size_t index) {
  const auto& x = entry.at(index);
  if (!x.is_number_integer()) {
    throw StateParseError("mode indices must be integers");
  }
  return x.get<int>();
}

double delta_field(const nlohmann::json& json, const char* key) {
  if (!json.contains(key)) {
    return 0.0;
  }
  if (!json[key].is_number()) {
    throw StateParseError(std::string(key) + " must be a number");
  }
  return json[key].get<double>();
}

}  // namespace

double parse_real(const std::string& raw) {
  const std::string text = trim(raw);
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    return parse_plain(text, raw);
  }
  std::string prefix = text.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') {
    prefix.pop_back();
  }
  double factor = 1.0;
  if (prefix == "-") {
    factor = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    factor = parse_plain(prefix, raw);
  }
  const std::string suffix = text.substr(pos + 2);
  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix.front() != '/') {
      throw InvalidArgument("cannot parse number '" + raw + "'");
    }
    divisor = parse_plain(suffix.substr(1), raw);
  }
  const double value = factor * kPi / divisor;
  if (!std::isfinite(value)) {
    throw InvalidArgument("number '" + raw + "' is not finite");
  }
  return value;
}

nlohmann::json to_json(const GeneralState& state) {
  nlohmann::json coefficients = nlohmann::json::array();
  for (const auto& c : state.coefficients()) {
    coefficients.push_back({c.mode, c.amplitude.real(), c.amplitude.imag()});
  }
  return {{"delta", state.delta()}, {"coefficients", coefficients}};
}

nlohmann::json to_json(const TwoModeState& state) {
  nlohmann::json coefficients = nlohmann::json::array();
  for (const auto& c : state.coefficients()) {
    coefficients.push_back({c.m, c.n, c.amplitude.real(), c.amplitude.imag()});
  }
  return {{"delta1", state.delta1()}, {"delta2", state.delta2()}, {"coefficients", coefficients}};
}

std::variant<GeneralState, TwoModeState> state_from_json(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("coefficients") || !json["coefficients"].is_array() ||
      json["coefficients"].empty()) {
    throw StateParseError("state JSON needs a non-empty 'coefficients' array");
  }
  const bool normalize = json.value("normalize", false);
  const auto& rows = json["coefficients"];
  const std::size_t width = rows.front().is_array() ? rows.front().size() : 0;
  if (width != 3 && width != 4) {
    throw StateParseError("coefficients must be [m, re, im] or [m, n, re, im] rows");
  }
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width) {
      throw StateParseError("all coefficient rows must have the same length");
    }
  }
  if (width == 3) {
    if (json.contains("delta1") || json.contains("delta2")) {
      throw StateParseError("single-mode states take 'delta', not 'delta1'/'delta2'");
    }
    std::vector<ModeAmplitude> coefficients;
    for (const auto& row : rows) {
      coefficients.push_back({mode_at(row, 0), {number_at(row, 1), number_at(row, 2)}});
    }
    const double delta = delta_field(json, "delta");
    return normalize ? GeneralState::normalized(std::move(coefficients), delta)
                     : GeneralState(std::move(coefficients), delta);
  }
  if (json.contains("delta")) {
    throw StateParseError("two-mode states take 'delta1'/'delta2', not 'delta'");
  }
  std::vector<ModePairAmplitude> coefficients;
  for (const auto& row : rows) {
    coefficients.push_back(
        {mode_at(row, 0), mode_at(row, 1), {number_at(row, 2), number_at(row, 3)}});
  }
  const double delta1 = delta_field(json, "delta1");
  const double delta2 = delta_field(json, "delta2");
  return normalize ? TwoModeState::normalized(std::move(coefficients), delta1, delta2)
                   : TwoModeState(std::move(coefficients), delta1, delta2);
}

std::variant<GeneralState, TwoModeState> read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw StateParseError("cannot open state file '" + path + "'");
  }
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& e) {
    throw StateParseError("state file '" + path + "' is not valid JSON: " + e.what());
  }
  return state_from_json(json);
}

nlohmann::json to_json(const SincIdentityReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"category", c.category},
                      {"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"deviation", c.deviation()},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed()}});
  }
  return {{"radius", report.radius},
          {"checks", checks},
          {"max_deviation",
           {{"single_sinc", report.max_deviation("single_sinc")},
            {"sinc_squared", report.max_deviation("sinc_squared")},
            {"orthonormality", report.max_deviation("orthonormality")}}},
          {"passed", report.passed()}};
}

}  // namespace oamwigner
