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

#include "oamwigner/closed_forms.hpp"

#include <cmath>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_kernel.hpp"

namespace oamwigner {

namespace {

constexpr double kFourPiSquared = kTwoPi * kTwoPi;

// sinc pi(p - delta - center), grouped like the kernel.
double shifted_sinc(double p, double delta, double center) {
  return sinc_pi((p - delta) - center);
}

double midpoint(int a, int b) {
  return 0.5 * (static_cast<double>(a) + static_cast<double>(b));
}

void check_family(const BellFamilySpec& spec) {
  if (spec.m0 == spec.m1 || spec.n0 == spec.n1) {
    throw DegenerateModes("Bell family needs m1 != m0 and n1 != n0");
  }
  if (!(spec.delta1 >= 0.0 && spec.delta1 < 1.0) ||
      !(spec.delta2 >= 0.0 && spec.delta2 < 1.0)) {
    throw InvalidArgument("deltas must lie in [0, 1)");
  }
}

}  // namespace

double qubit_wigner(const QubitSpec& spec, const PhasePoint& point) {
  validate(spec);
  const double p = point.p();
  const double c = std::cos(spec.beta);
  const double s = std::sin(spec.beta);
  const double interference = std::sin(2 * spec.beta) *
                              std::cos((spec.m0 - spec.m1) * point.theta() - spec.alpha) *
                              shifted_sinc(p, spec.delta, midpoint(spec.m0, spec.m1));
  return (c * c * shifted_sinc(p, spec.delta, spec.m0) +
          s * s * shifted_sinc(p, spec.delta, spec.m1) + interference) /
         kTwoPi;
}

double density_wigner(const BlochDensity& rho, const PhasePoint& point) {
  validate(rho);
  const auto& a = rho.a;
  const double p = point.p();
  const double angle = (rho.m0 - rho.m1) * point.theta();
  const double interference = (a[0] * std::cos(angle) + a[1] * std::sin(angle)) *
                              shifted_sinc(p, rho.delta, midpoint(rho.m0, rho.m1));
  return ((1.0 + a[2]) / 2 * shifted_sinc(p, rho.delta, rho.m0) +
          (1.0 - a[2]) / 2 * shifted_sinc(p, rho.delta, rho.m1) + interference) /
         kTwoPi;
}

double two_qubit_wigner(const TwoQubitSpec& spec, const PhasePoint4& point) {
  validate(spec);
  const auto& b = spec.b;
  const double t1 = point.theta1();
  const double t2 = point.theta2();
  const int dm = spec.m1 - spec.m0;
  const int dn = spec.n1 - spec.n0;

  auto s1 = [&](double center) { return shifted_sinc(point.p1(), spec.delta1, center); };
  auto s2 = [&](double center) { return shifted_sinc(point.p2(), spec.delta2, center); };
  const double p1_m0 = s1(spec.m0);
  const double p1_m1 = s1(spec.m1);
  const double p1_mid = s1(midpoint(spec.m0, spec.m1));
  const double p2_n0 = s2(spec.n0);
  const double p2_n1 = s2(spec.n1);
  const double p2_mid = s2(midpoint(spec.n0, spec.n1));

  double total = b.b00 * b.b00 * p1_m0 * p2_n0 + b.b10 * b.b10 * p1_m1 * p2_n0 +
                 b.b01 * b.b01 * p1_m0 * p2_n1 + b.b11 * b.b11 * p1_m1 * p2_n1;
  total += 2 * b.b00 * b.b10 * std::cos(dm * t1 + spec.alpha10) * p1_mid * p2_n0;
  total += 2 * b.b00 * b.b01 * std::cos(dn * t2 + spec.alpha01) * p1_m0 * p2_mid;
  total += 2 * b.b00 * b.b11 * std::cos(dm * t1 + dn * t2 + spec.alpha11) * p1_mid * p2_mid;
  total += 2 * b.b01 * b.b10 * std::cos(dm * t1 - dn * t2 + spec.alpha10 - spec.alpha01) *
           p1_mid * p2_mid;
  total += 2 * b.b01 * b.b11 * std::cos(dm * t1 + spec.alpha11 - spec.alpha01) * p1_mid * p2_n1;
  total += 2 * b.b10 * b.b11 * std::cos(dn * t2 + spec.alpha11 - spec.alpha10) * p1_m1 * p2_mid;
  return total / kFourPiSquared;
}

double bell_wigner(BellKind kind, int m0, const PhasePoint4& point) {
  if (m0 == 0) {
    throw ZeroMode("Bell states need m0 != 0");
  }
  const double p1 = point.p1();
  const double p2 = point.p2();
  const double sign = (kind == BellKind::PhiPlus || kind == BellKind::PsiPlus) ? 1.0 : -1.0;
  const double centre = sinc_pi(p1) * sinc_pi(p2);
  double diagonal;
  double angle;
  if (kind == BellKind::PhiPlus || kind == BellKind::PhiMinus) {
    diagonal = sinc_pi(p1 - m0) * sinc_pi(p2 - m0) + sinc_pi(p1 + m0) * sinc_pi(p2 + m0);
    angle = 2.0 * m0 * (point.theta1() + point.theta2());
  } else {
    diagonal = sinc_pi(p1 - m0) * sinc_pi(p2 + m0) + sinc_pi(p1 + m0) * sinc_pi(p2 - m0);
    angle = 2.0 * m0 * (point.theta1() - point.theta2());
  }
  return (0.5 * diagonal + sign * std::cos(angle) * centre) / kFourPiSquared;
}

double bell_family_wigner(const BellFamilySpec& spec, const PhasePoint4& point) {
  check_family(spec);
  auto s1 = [&](double center) { return shifted_sinc(point.p1(), spec.delta1, center); };
  auto s2 = [&](double center) { return shifted_sinc(point.p2(), spec.delta2, center); };
  const double c = std::cos(spec.angle);
  const double s = std::sin(spec.angle);
  const TorusSpiralSpec torus{spec.m0, spec.m1, spec.n0, spec.n1, spec.phase, spec.phase};
  const auto args = interference_argument(torus, point.theta1(), point.theta2());

  double diagonal;
  double angle;
  if (spec.family == BellFamily::ZeroZeroOneOne) {
    diagonal = c * c * s1(spec.m0) * s2(spec.n0) + s * s * s1(spec.m1) * s2(spec.n1);
    angle = args.plus;
  } else {
    // The weights sit on e_{m1 n0} (cos^2) and e_{m0 n1} (sin^2).
    diagonal = c * c * s1(spec.m1) * s2(spec.n0) + s * s * s1(spec.m0) * s2(spec.n1);
    angle = args.minus;
  }
  const double interference = std::sin(2 * spec.angle) * std::cos(angle) *
                              s1(midpoint(spec.m0, spec.m1)) * s2(midpoint(spec.n0, spec.n1));
  return (diagonal + interference) / kFourPiSquared;
}

TwoQubitSpec to_two_qubit_spec(const BellFamilySpec& spec) {
  check_family(spec);
  TwoQubitSpec out{.m0 = spec.m0,
                   .m1 = spec.m1,
                   .n0 = spec.n0,
                   .n1 = spec.n1,
                   .delta1 = spec.delta1,
                   .delta2 = spec.delta2};
  if (spec.family == BellFamily::ZeroZeroOneOne) {
    out.b = {std::cos(spec.angle), 0.0, 0.0, std::sin(spec.angle)};
    out.alpha11 = spec.phase;
  } else {
    out.b = {0.0, std::cos(spec.angle), std::sin(spec.angle), 0.0};
    out.alpha01 = spec.phase;
  }
  return out;
}

InterferenceArguments interference_argument(const TorusSpiralSpec& spec, double theta1,
                                            double theta2) {
  if (spec.m0 == spec.m1 || spec.n0 == spec.n1) {
    throw DegenerateModes("interference arguments need m1 != m0 and n1 != n0");
  }
  const double a = (spec.m1 - spec.m0) * theta1;
  const double b = (spec.n1 - spec.n0) * theta2;
  return {a + b + spec.alpha11, a - b - spec.alpha01};
}

TorusAngles invert_interference(double vartheta_plus, double vartheta_minus,
                                const TorusSpiralSpec& spec) {
  if (spec.m0 == spec.m1 || spec.n0 == spec.n1) {
    throw DegenerateModes("interference arguments need m1 != m0 and n1 != n0");
  }
  const double sum = vartheta_plus + vartheta_minus + spec.alpha01 - spec.alpha11;
  const double diff = vartheta_plus - vartheta_minus - spec.alpha01 - spec.alpha11;
  return {sum / (2.0 * (spec.m1 - spec.m0)), diff / (2.0 * (spec.n1 - spec.n0))};
}

}  // namespace oamwigner
