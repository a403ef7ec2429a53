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

#include "oamwigner/phase_kernel.hpp"

#include <cmath>
#include <string>

#include "oamwigner/errors.hpp"

namespace oamwigner {

namespace {

std::complex<double> unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

double checked_real(std::complex<double> sum) {
  if (!(std::abs(sum.imag()) <= kHermiticityTolerance)) {
    throw NumericalHermiticityViolation("Wigner sum has imaginary residue " +
                                        std::to_string(sum.imag()));
  }
  return sum.real();
}

// sinc argument p - delta - (m+n)/2, grouped so that a delta shift of p
// reproduces the delta = 0 evaluation bit for bit.
double kernel_argument(int m, int n, double delta, double p) {
  return (p - delta) - 0.5 * (static_cast<double>(m) + static_cast<double>(n));
}

}  // namespace

double sinc_pi(double x) {
  const double y = kPi * x;
  if (std::abs(y) < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0 * (1.0 - y2 / 72.0)));
  }
  // sin(pi x) = sin(pi r) with r = x mod 2 in [-1, 1]; both steps are exact.
  const double r = x - 2.0 * std::nearbyint(0.5 * x);
  double s;
  if (r > 0.5) {
    s = std::sin(kPi * (1.0 - r));
  } else if (r < -0.5) {
    s = -std::sin(kPi * (1.0 + r));
  } else {
    s = std::sin(kPi * r);
  }
  return s / y;
}

KernelElement kernel_element(int m, int n, double delta, const PhasePoint& point) {
  const double s = sinc_pi(kernel_argument(m, n, delta, point.p()));
  return {unit_phase((n - m) * point.theta()) * (s / kTwoPi)};
}

std::complex<double> bilinear_sum_1d(const GeneralState& state, const PhasePoint& point) {
  const auto coefficients = state.coefficients();
  std::complex<double> sum{};
  for (const auto& row : coefficients) {
    for (const auto& col : coefficients) {
      sum += std::conj(row.amplitude) * col.amplitude *
             kernel_element(row.mode, col.mode, state.delta(), point).value;
    }
  }
  return sum;
}

std::complex<double> bilinear_sum_2d(const TwoModeState& state, const PhasePoint4& point) {
  const auto coefficients = state.coefficients();
  const PhasePoint first = point.first();
  const PhasePoint second = point.second();
  std::complex<double> sum{};
  for (const auto& row : coefficients) {
    for (const auto& col : coefficients) {
      sum += std::conj(row.amplitude) * col.amplitude *
             kernel_element(row.m, col.m, state.delta1(), first).value *
             kernel_element(row.n, col.n, state.delta2(), second).value;
    }
  }
  return sum;
}

double wigner_bilinear_1d(const GeneralState& state, const PhasePoint& point) {
  return checked_real(bilinear_sum_1d(state, point));
}

double wigner_bilinear_2d(const TwoModeState& state, const PhasePoint4& point) {
  return checked_real(bilinear_sum_2d(state, point));
}

double wigner_bilinear_density(const BlochDensity& rho, const PhasePoint& point) {
  validate(rho);
  const auto& a = rho.a;
  const std::complex<double> rho00{(1.0 + a[2]) / 2, 0.0};
  const std::complex<double> rho11{(1.0 - a[2]) / 2, 0.0};
  const std::complex<double> rho01{a[0] / 2, -a[1] / 2};
  const std::complex<double> rho10 = std::conj(rho01);
  auto v = [&](int j, int k) { return kernel_element(j, k, rho.delta, point).value; };
  const std::complex<double> trace = rho00 * v(rho.m0, rho.m0) + rho01 * v(rho.m1, rho.m0) +
                                     rho10 * v(rho.m0, rho.m1) + rho11 * v(rho.m1, rho.m1);
  return checked_real(trace);
}

}  // namespace oamwigner
