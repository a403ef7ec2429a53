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

#include "oamwigner/state.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_point.hpp"

namespace oamwigner {

namespace {

void check_delta(double delta, const char* name) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1), got " +
                          std::to_string(delta));
  }
}

void check_phase(double alpha, const char* name) {
  if (!(alpha >= 0.0 && alpha < kTwoPi)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 2pi), got " +
                          std::to_string(alpha));
  }
}

void check_finite(Amplitude c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw InvalidArgument("amplitudes must be finite");
  }
}

template <class Coefficients>
double squared_norm(const Coefficients& coefficients) {
  double total = 0.0;
  for (const auto& c : coefficients) {
    total += std::norm(c.amplitude);
  }
  return total;
}

void check_normalized(double norm2) {
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    throw NonNormalizedState("sum |c|^2 = " + std::to_string(norm2) +
                             " deviates from 1");
  }
}

// Angle in [0, 2pi) of a complex number; zero maps to zero.
double phase_of(Amplitude c) {
  double a = std::arg(c);
  if (a < 0.0) {
    a += kTwoPi;
  }
  return a >= kTwoPi ? 0.0 : a;
}

}  // namespace

GeneralState::GeneralState(std::vector<ModeAmplitude> coefficients, double delta)
    : delta_(delta) {
  check_delta(delta, "delta");
  std::erase_if(coefficients, [](const ModeAmplitude& c) {
    check_finite(c.amplitude);
    return c.amplitude == Amplitude{};
  });
  std::sort(coefficients.begin(), coefficients.end(),
            [](const auto& a, const auto& b) { return a.mode < b.mode; });
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (coefficients[i].mode == coefficients[i - 1].mode) {
      throw DuplicateMode("mode " + std::to_string(coefficients[i].mode) +
                          " appears twice");
    }
  }
  check_normalized(squared_norm(coefficients));
  coefficients_ = std::move(coefficients);
}

GeneralState GeneralState::normalized(std::vector<ModeAmplitude> coefficients,
                                      double delta) {
  const double norm = std::sqrt(squared_norm(coefficients));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NonNormalizedState("cannot normalize a zero or non-finite state");
  }
  for (auto& c : coefficients) {
    c.amplitude /= norm;
  }
  return GeneralState(std::move(coefficients), delta);
}

Amplitude GeneralState::amplitude(int mode) const {
  auto it = std::lower_bound(
      coefficients_.begin(), coefficients_.end(), mode,
      [](const ModeAmplitude& c, int m) { return c.mode < m; });
  return (it != coefficients_.end() && it->mode == mode) ? it->amplitude : Amplitude{};
}

int GeneralState::max_abs_mode() const {
  int result = 0;
  for (const auto& c : coefficients_) {
    result = std::max(result, std::abs(c.mode));
  }
  return result;
}

Amplitude GeneralState::wave_function(double phi) const {
  Amplitude psi{};
  for (const auto& c : coefficients_) {
    psi += c.amplitude * std::polar(1.0, (c.mode + delta_) * phi);
  }
  return psi;
}

TwoModeState::TwoModeState(std::vector<ModePairAmplitude> coefficients,
                           double delta1, double delta2)
    : delta1_(delta1), delta2_(delta2) {
  check_delta(delta1, "delta1");
  check_delta(delta2, "delta2");
  std::erase_if(coefficients, [](const ModePairAmplitude& c) {
    check_finite(c.amplitude);
    return c.amplitude == Amplitude{};
  });
  auto key = [](const ModePairAmplitude& c) { return std::pair{c.m, c.n}; };
  std::sort(coefficients.begin(), coefficients.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (key(coefficients[i]) == key(coefficients[i - 1])) {
      throw DuplicateMode("mode pair (" + std::to_string(coefficients[i].m) + "," +
                          std::to_string(coefficients[i].n) + ") appears twice");
    }
  }
  check_normalized(squared_norm(coefficients));
  coefficients_ = std::move(coefficients);
}

TwoModeState TwoModeState::normalized(std::vector<ModePairAmplitude> coefficients,
                                      double delta1, double delta2) {
  const double norm = std::sqrt(squared_norm(coefficients));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NonNormalizedState("cannot normalize a zero or non-finite state");
  }
  for (auto& c : coefficients) {
    c.amplitude /= norm;
  }
  return TwoModeState(std::move(coefficients), delta1, delta2);
}

Amplitude TwoModeState::amplitude(int m, int n) const {
  for (const auto& c : coefficients_) {
    if (c.m == m && c.n == n) {
      return c.amplitude;
    }
  }
  return {};
}

int TwoModeState::max_abs_mode() const {
  int result = 0;
  for (const auto& c : coefficients_) {
    result = std::max({result, std::abs(c.m), std::abs(c.n)});
  }
  return result;
}

Amplitude TwoModeState::wave_function(double phi1, double phi2) const {
  Amplitude psi{};
  for (const auto& c : coefficients_) {
    psi += c.amplitude *
           std::polar(1.0, (c.m + delta1_) * phi1 + (c.n + delta2_) * phi2);
  }
  return psi;
}

TwoQubitAmplitudes amplitudes_from_angles(double beta, double gamma, double phi) {
  if (!(beta >= 0.0 && beta < kPi) || !(gamma >= 0.0 && gamma < kPi)) {
    throw InvalidArgument("beta and gamma must lie in [0, pi)");
  }
  check_phase(phi, "phi");
  const double sb = std::sin(beta);
  const double sg = std::sin(gamma);
  return {std::cos(beta), sb * std::cos(gamma), sb * sg * std::cos(phi),
          sb * sg * std::sin(phi)};
}

BellKind parse_bell_kind(const std::string& text) {
  std::string t;
  for (char ch : text) {
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (t == "phi+") return BellKind::PhiPlus;
  if (t == "phi-") return BellKind::PhiMinus;
  if (t == "psi+") return BellKind::PsiPlus;
  if (t == "psi-") return BellKind::PsiMinus;
  throw InvalidArgument("unknown Bell state '" + text + "' (phi+, phi-, psi+, psi-)");
}

std::string to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus:
      return "phi+";
    case BellKind::PhiMinus:
      return "phi-";
    case BellKind::PsiPlus:
      return "psi+";
    case BellKind::PsiMinus:
      return "psi-";
  }
  return "?";
}

void validate(const QubitSpec& spec) {
  if (spec.m0 == spec.m1) {
    throw DegenerateModes("qubit modes must differ (m0 = m1 = " +
                          std::to_string(spec.m0) + ")");
  }
  check_phase(spec.alpha, "alpha");
  if (!(spec.beta >= 0.0 && spec.beta <= kPi / 2)) {
    throw InvalidArgument("beta must lie in [0, pi/2], got " + std::to_string(spec.beta));
  }
  check_delta(spec.delta, "delta");
}

void validate(const TwoQubitSpec& spec) {
  if (spec.m0 == spec.m1 || spec.n0 == spec.n1) {
    throw DegenerateModes("2-qubit modes need m1 != m0 and n1 != n0");
  }
  const auto& b = spec.b;
  for (double x : {b.b00, b.b10, b.b01, b.b11}) {
    if (!std::isfinite(x)) {
      throw InvalidArgument("b values must be finite");
    }
  }
  const double norm2 = b.b00 * b.b00 + b.b10 * b.b10 + b.b01 * b.b01 + b.b11 * b.b11;
  check_normalized(norm2);
  check_phase(spec.alpha10, "alpha10");
  check_phase(spec.alpha01, "alpha01");
  check_phase(spec.alpha11, "alpha11");
  check_delta(spec.delta1, "delta1");
  check_delta(spec.delta2, "delta2");
}

void validate(const BlochDensity& rho) {
  if (rho.m0 == rho.m1) {
    throw DegenerateModes("density modes must differ");
  }
  for (double x : rho.a) {
    if (!std::isfinite(x)) {
      throw InvalidBlochVector("Bloch vector must be finite");
    }
  }
  const double len = std::hypot(rho.a[0], rho.a[1], rho.a[2]);
  if (len > 1.0 + 1e-12) {
    throw InvalidBlochVector("|a| = " + std::to_string(len) + " exceeds 1");
  }
  check_delta(rho.delta, "delta");
}

GeneralState qubit_to_state(const QubitSpec& spec) {
  validate(spec);
  return GeneralState({{spec.m0, std::cos(spec.beta)},
                       {spec.m1, std::polar(std::sin(spec.beta), spec.alpha)}},
                      spec.delta);
}

QubitSpec state_to_qubit(const GeneralState& state, int m0, int m1) {
  if (m0 == m1) {
    throw DegenerateModes("qubit modes must differ");
  }
  for (const auto& c : state.coefficients()) {
    if (c.mode != m0 && c.mode != m1) {
      throw SubspaceMismatch("state has support outside {m0, m1}");
    }
  }
  const Amplitude c0 = state.amplitude(m0);
  const Amplitude c1 = state.amplitude(m1);
  QubitSpec spec{.m0 = m0, .m1 = m1, .delta = state.delta()};
  spec.beta = std::atan2(std::abs(c1), std::abs(c0));
  if (c0 != Amplitude{} && c1 != Amplitude{}) {
    spec.alpha = phase_of(c1 * std::conj(c0));
  }
  return spec;
}

GeneralState uniform_qudit(std::span<const int> modes, double delta) {
  if (modes.empty()) {
    throw InvalidArgument("a qudit needs at least one mode");
  }
  const double c = 1.0 / std::sqrt(static_cast<double>(modes.size()));
  std::vector<ModeAmplitude> coefficients;
  coefficients.reserve(modes.size());
  for (int m : modes) {
    coefficients.push_back({m, c});
  }
  return GeneralState(std::move(coefficients), delta);
}

TwoModeState two_qubit_to_state(const TwoQubitSpec& spec) {
  validate(spec);
  const auto& b = spec.b;
  return TwoModeState({{spec.m0, spec.n0, b.b00},
                       {spec.m1, spec.n0, std::polar(1.0, spec.alpha10) * b.b10},
                       {spec.m0, spec.n1, std::polar(1.0, spec.alpha01) * b.b01},
                       {spec.m1, spec.n1, std::polar(1.0, spec.alpha11) * b.b11}},
                      spec.delta1, spec.delta2);
}

TwoModeState bell_state(BellKind kind, int m0) {
  if (m0 == 0) {
    throw ZeroMode("Bell states need m0 != 0");
  }
  const double c = std::numbers::sqrt2 / 2;
  const double sign = (kind == BellKind::PhiPlus || kind == BellKind::PsiPlus) ? 1.0 : -1.0;
  if (kind == BellKind::PhiPlus || kind == BellKind::PhiMinus) {
    return TwoModeState({{m0, m0, c}, {-m0, -m0, sign * c}});
  }
  return TwoModeState({{m0, -m0, c}, {-m0, m0, sign * c}});
}

double expectation_L(const GeneralState& state) {
  double total = 0.0;
  for (const auto& c : state.coefficients()) {
    total += (c.mode + state.delta()) * std::norm(c.amplitude);
  }
  return total;
}

double expectation_L(const TwoModeState& state) {
  double total = 0.0;
  for (const auto& c : state.coefficients()) {
    total += (c.m + c.n + state.delta1() + state.delta2()) * std::norm(c.amplitude);
  }
  return total;
}

BlochDensity density_from_qubit(const QubitSpec& spec) {
  validate(spec);
  const double s = std::sin(2 * spec.beta);
  return {spec.m0,
          spec.m1,
          {s * std::cos(spec.alpha), s * std::sin(spec.alpha), std::cos(2 * spec.beta)},
          spec.delta};
}

std::vector<std::pair<double, GeneralState>> pure_components(const BlochDensity& rho) {
  validate(rho);
  const auto& a = rho.a;
  const double len = std::min(1.0, std::hypot(a[0], a[1], a[2]));
  std::vector<std::pair<double, GeneralState>> out;
  if (len == 0.0) {
    out.emplace_back(0.5, GeneralState({{rho.m0, 1.0}}, rho.delta));
    out.emplace_back(0.5, GeneralState({{rho.m1, 1.0}}, rho.delta));
    return out;
  }
  // The pure state with unit Bloch vector n has beta = acos(n3)/2, alpha = atan2(n2, n1).
  auto pure_along = [&](double sign) {
    const double n1 = sign * a[0] / len;
    const double n2 = sign * a[1] / len;
    const double n3 = std::clamp(sign * a[2] / len, -1.0, 1.0);
    QubitSpec spec{.m0 = rho.m0, .m1 = rho.m1, .delta = rho.delta};
    spec.beta = std::acos(n3) / 2;
    spec.alpha = (n1 == 0.0 && n2 == 0.0) ? 0.0 : phase_of({n1, n2});
    return qubit_to_state(spec);
  };
  out.emplace_back((1.0 + len) / 2, pure_along(1.0));
  if (len < 1.0) {
    out.emplace_back((1.0 - len) / 2, pure_along(-1.0));
  }
  return out;
}

WindingDecomposition decompose_winding(double b) {
  constexpr double kLimit = 4611686018427387904.0;  // 2^62
  if (!std::isfinite(b) || std::abs(b) >= kLimit) {
    throw InvalidArgument("winding number must be finite with |b| < 2^62");
  }
  double n = std::floor(b);
  double delta = b - n;
  if (delta >= 1.0) {
    // b is a tiny negative number and b - floor(b) rounded up to 1.
    n += 1.0;
    delta = 0.0;
  }
  return {static_cast<std::int64_t>(n), delta};
}

}  // namespace oamwigner
