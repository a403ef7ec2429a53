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

#include "oamwigner/phase_point.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

// Direct formulas for the special states. Each one is cross-checked in the
// tests against the kernel double sum and the quadrature oracle.

/// 2 pi V = cos^2 b sinc pi(p-m0-d) + sin^2 b sinc pi(p-m1-d)
///        + sin 2b cos[(m0-m1) theta - alpha] sinc pi[p-(m0+m1+2d)/2].
double qubit_wigner(const QubitSpec& spec, const PhasePoint& point);

/// Mixed qubit. Throws InvalidBlochVector if |a| > 1 + 1e-12.
double density_wigner(const BlochDensity& rho, const PhasePoint& point);

/// The ten-term general 2-qubit Wigner function, with p1 sinc arguments
/// shifted by delta1 and p2 arguments by delta2.
double two_qubit_wigner(const TwoQubitSpec& spec, const PhasePoint4& point);

/// The four Bell states on modes {m0, -m0}. Throws ZeroMode for m0 = 0.
double bell_wigner(BellKind kind, int m0, const PhasePoint4& point);

enum class BellFamily {
  /// cos b e_{m0 n0} + e^{i a11} sin b e_{m1 n1}
  ZeroZeroOneOne,
  /// cos g e_{m1 n0} + e^{i a01} sin g e_{m0 n1}
  OneZeroZeroOne,
};

struct BellFamilySpec {
  BellFamily family = BellFamily::ZeroZeroOneOne;
  double angle = 0.0;  // beta or gamma
  double phase = 0.0;  // alpha11 or alpha01
  int m0 = 1;
  int m1 = -1;
  int n0 = 1;
  int n1 = -1;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

/// Three-term Wigner function of the two one-parameter Bell families; the
/// angular dependence enters only through vartheta_+ or vartheta_-.
double bell_family_wigner(const BellFamilySpec& spec, const PhasePoint4& point);

/// The same family member as a TwoQubitSpec (for the kernel cross-check).
TwoQubitSpec to_two_qubit_spec(const BellFamilySpec& spec);

struct TorusSpiralSpec {
  int m0 = 1;
  int m1 = -1;
  int n0 = 1;
  int n1 = -1;
  double alpha11 = 0.0;
  double alpha01 = 0.0;
};

struct InterferenceArguments {
  double plus;   // (m1-m0) theta1 + (n1-n0) theta2 + alpha11
  double minus;  // (m1-m0) theta1 - (n1-n0) theta2 - alpha01
};

/// Throws DegenerateModes if m1 = m0 or n1 = n0.
InterferenceArguments interference_argument(const TorusSpiralSpec& spec, double theta1,
                                            double theta2);

struct TorusAngles {
  double theta1;
  double theta2;
};

/// Exact inverse of interference_argument (no reduction modulo 2 pi).
TorusAngles invert_interference(double vartheta_plus, double vartheta_minus,
                                const TorusSpiralSpec& spec);

}  // namespace oamwigner
