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

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oamwigner {

using Amplitude = std::complex<double>;

/// Tolerance on sum |c|^2 = 1 accepted by the state constructors.
inline constexpr double kNormTolerance = 1e-12;

struct ModeAmplitude {
  int mode;
  Amplitude amplitude;
};

struct ModePairAmplitude {
  int m;
  int n;
  Amplitude amplitude;
};

/// A normalized superposition sum_m c_m e^{i(m+delta)phi} with finite support.
///
/// Coefficients are kept sorted by mode; exact zeros are dropped so a
/// degenerate qubit (beta = 0) is stored as a single basis vector.
class GeneralState {
 public:
  /// Throws DuplicateMode, NonNormalizedState (including an empty support)
  /// or InvalidArgument (delta outside [0, 1), non-finite amplitudes).
  GeneralState(std::vector<ModeAmplitude> coefficients, double delta = 0.0);

  /// Rescales the coefficients to unit norm before validating.
  static GeneralState normalized(std::vector<ModeAmplitude> coefficients,
                                 double delta = 0.0);

  std::span<const ModeAmplitude> coefficients() const { return coefficients_; }
  double delta() const { return delta_; }
  std::size_t support_size() const { return coefficients_.size(); }

  /// c_m, or zero when m is outside the support.
  Amplitude amplitude(int mode) const;
  int max_abs_mode() const;

  /// psi(phi) = sum_m c_m e^{i(m+delta)phi}.
  Amplitude wave_function(double phi) const;

 private:
  std::vector<ModeAmplitude> coefficients_;
  double delta_;
};

/// A normalized state on the torus with coefficients c_{mn} of
/// e^{i(m+delta1)phi1 + i(n+delta2)phi2}.
class TwoModeState {
 public:
  TwoModeState(std::vector<ModePairAmplitude> coefficients, double delta1 = 0.0,
               double delta2 = 0.0);

  static TwoModeState normalized(std::vector<ModePairAmplitude> coefficients,
                                 double delta1 = 0.0, double delta2 = 0.0);

  std::span<const ModePairAmplitude> coefficients() const { return coefficients_; }
  double delta1() const { return delta1_; }
  double delta2() const { return delta2_; }
  std::size_t support_size() const { return coefficients_.size(); }

  Amplitude amplitude(int m, int n) const;
  int max_abs_mode() const;

  Amplitude wave_function(double phi1, double phi2) const;

 private:
  std::vector<ModePairAmplitude> coefficients_;
  double delta1_;
  double delta2_;
};

/// cos(beta) e_{m0} + e^{i alpha} sin(beta) e_{m1}. beta = 0 and beta = pi/2
/// are admitted and give the basis vectors.
struct QubitSpec {
  int m0 = 0;
  int m1 = 1;
  double alpha = 0.0;  // [0, 2 pi)
  double beta = 0.0;   // [0, pi/2]
  double delta = 0.0;  // [0, 1)
};

struct TwoQubitAmplitudes {
  double b00 = 1.0;
  double b10 = 0.0;
  double b01 = 0.0;
  double b11 = 0.0;
};

/// b00 = cos beta, b10 = sin beta cos gamma, b01 = sin beta sin gamma cos phi,
/// b11 = sin beta sin gamma sin phi.
TwoQubitAmplitudes amplitudes_from_angles(double beta, double gamma, double phi);

/// c00 e_{m0 n0} + c10 e_{m1 n0} + c01 e_{m0 n1} + c11 e_{m1 n1} with
/// c00 = b00 and c_jk = e^{i alpha_jk} b_jk otherwise.
struct TwoQubitSpec {
  int m0 = 0;
  int m1 = 1;
  int n0 = 0;
  int n1 = 1;
  TwoQubitAmplitudes b{};
  double alpha10 = 0.0;
  double alpha01 = 0.0;
  double alpha11 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

/// rho = (I + a . sigma) / 2 on span{e_{m0}, e_{m1}}.
struct BlochDensity {
  int m0 = 0;
  int m1 = 1;
  std::array<double, 3> a{0.0, 0.0, 0.0};
  double delta = 0.0;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Parses "phi+", "phi-", "psi+", "psi-" (case-insensitive).
BellKind parse_bell_kind(const std::string& text);
std::string to_string(BellKind kind);

struct WindingDecomposition {
  std::int64_t n_b;
  double delta;
};

void validate(const QubitSpec& spec);
void validate(const TwoQubitSpec& spec);
void validate(const BlochDensity& rho);

GeneralState qubit_to_state(const QubitSpec& spec);

/// Reads (alpha, beta) back from a state supported on {m0, m1}, with the
/// e_{m0} coefficient taken as the real non-negative anchor.
QubitSpec state_to_qubit(const GeneralState& state, int m0, int m1);

GeneralState uniform_qudit(std::span<const int> modes, double delta = 0.0);

TwoModeState two_qubit_to_state(const TwoQubitSpec& spec);

/// Phi+- = (e_{m0}e_{m0} +- e_{-m0}e_{-m0})/sqrt2,
/// Psi+- = (e_{m0}e_{-m0} +- e_{-m0}e_{m0})/sqrt2.  Throws ZeroMode for m0 = 0.
TwoModeState bell_state(BellKind kind, int m0);

double expectation_L(const GeneralState& state);
double expectation_L(const TwoModeState& state);

/// Bloch vector of the pure qubit: (sin 2b cos a, sin 2b sin a, cos 2b).
BlochDensity density_from_qubit(const QubitSpec& spec);

/// Spectral decomposition of rho into at most two weighted pure states.
std::vector<std::pair<double, GeneralState>> pure_components(const BlochDensity& rho);

/// b = n_b + delta with delta in [0, 1).
WindingDecomposition decompose_winding(double b);

}  // namespace oamwigner
