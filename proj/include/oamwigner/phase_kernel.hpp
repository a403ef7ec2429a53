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

#include <complex>

#include "oamwigner/phase_point.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

/// sin(pi x) / (pi x), equal to 1 at x = 0.
///
/// The argument is reduced modulo 2 exactly before multiplying by pi, so
/// nonzero integers give exactly 0 and the relative error stays at a couple
/// of ulps for large |x|. Near zero a Taylor series is used.
double sinc_pi(double x);

/// V_mn(theta, p) = e^{i(n-m)theta} sinc pi[p - (m+n+2 delta)/2] / (2 pi).
struct KernelElement {
  std::complex<double> value;
};

KernelElement kernel_element(int m, int n, double delta, const PhasePoint& point);

/// Imaginary residue above which a bilinear Wigner value is rejected.
inline constexpr double kHermiticityTolerance = 1e-10;

/// sum_{m,n} conj(c_m) V_mn c_n without taking the real part.
std::complex<double> bilinear_sum_1d(const GeneralState& state, const PhasePoint& point);
std::complex<double> bilinear_sum_2d(const TwoModeState& state, const PhasePoint4& point);

/// Real Wigner function of a pure state from the kernel double sum.
/// Throws NumericalHermiticityViolation if the imaginary part of the sum
/// exceeds kHermiticityTolerance.
double wigner_bilinear_1d(const GeneralState& state, const PhasePoint& point);
double wigner_bilinear_2d(const TwoModeState& state, const PhasePoint4& point);

/// tr(rho V) with V the 2x2 kernel matrix on {m0, m1}.
double wigner_bilinear_density(const BlochDensity& rho, const PhasePoint& point);

}  // namespace oamwigner
