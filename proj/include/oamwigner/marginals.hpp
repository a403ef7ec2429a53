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

#include <functional>
#include <map>
#include <span>
#include <utility>

#include "oamwigner/quadrature.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

/// Angular density |psi(theta)|^2 / 2pi.
double marginal_angle(const GeneralState& state, double theta);
/// |psi(theta1, theta2)|^2 / (2pi)^2.
double marginal_angle(const TwoModeState& state, double theta1, double theta2);

/// Whittaker cardinal function sum_m |c_m|^2 sinc pi(p - m - delta).
double marginal_momentum(const GeneralState& state, double p);
double marginal_momentum(const TwoModeState& state, double p1, double p2);

/// A momentum profile sum_m w_m sinc pi(p - m - delta).
struct WhittakerProfile {
  std::map<int, double> weights;
  double delta = 0.0;

  static WhittakerProfile from_state(const GeneralState& state);
  double operator()(double p) const;
};

struct WhittakerProfile2D {
  std::map<std::pair<int, int>, double> weights;
  double delta1 = 0.0;
  double delta2 = 0.0;

  static WhittakerProfile2D from_state(const TwoModeState& state);
  double operator()(double p1, double p2) const;
};

using ModePair = std::pair<int, int>;

/// |c_m|^2 read from the coefficients; zero for modes outside the support.
std::map<int, double> extract_oam_probabilities(const GeneralState& state,
                                                std::span<const int> modes);
std::map<ModePair, double> extract_oam_probabilities(const TwoModeState& state,
                                                     std::span<const ModePair> modes);

/// int profile(p) sinc pi(p - m - delta) dp by truncated Gauss panels, for any
/// sampled profile. Throws QuadratureNotConverged when the radius and
/// radius/2 results differ by more than options.tolerance.
std::map<int, double> extract_oam_probabilities(const std::function<double(double)>& profile,
                                                double delta, std::span<const int> modes,
                                                const TruncationOptions& options = {});
std::map<int, double> extract_oam_probabilities(const WhittakerProfile& profile,
                                                std::span<const int> modes,
                                                const TruncationOptions& options = {});

/// 2D projection using the separable structure of the profile: every term
/// contributes w_kl G(k, m) G(l, n) with G the truncated sinc-product
/// integral along one axis.
std::map<ModePair, double> extract_oam_probabilities(const WhittakerProfile2D& profile,
                                                     std::span<const ModePair> modes,
                                                     const TruncationOptions& options = {});

/// |(chi, chi_hat)|^2 for two qubits on the same (m0, m1, delta).
/// Throws SubspaceMismatch otherwise.
double transition_probability_direct(const QubitSpec& first, const QubitSpec& second);

struct PhaseSpaceOptions {
  TruncationOptions truncation{};
  /// Trapezoid nodes in theta; 0 selects periodic_node_count(max |mode|).
  int theta_nodes = 0;
};

/// 2pi int dp int dtheta V1 V2 with the closed-form qubit Wigner functions.
double transition_probability_phase_space(const QubitSpec& first, const QubitSpec& second,
                                          const PhaseSpaceOptions& options = {});

/// tr(rho1 rho2) = (1 + a1 . a2) / 2.
double density_overlap(const BlochDensity& first, const BlochDensity& second);
double density_overlap_phase_space(const BlochDensity& first, const BlochDensity& second,
                                   const PhaseSpaceOptions& options = {});

/// int V(theta, p) dp of the kernel Wigner function, endpoint averaged.
double p_integrated_wigner(const GeneralState& state, double theta,
                           const TruncationOptions& options = {});
/// Two-mode version; each separable kernel term is integrated along p1 and
/// p2 with truncated_sinc_integral.
double p_integrated_wigner(const TwoModeState& state, double theta1, double theta2,
                           const TruncationOptions& options = {});

/// int V(theta, p) dtheta by the periodic trapezoid rule (nodes = 0: automatic).
double theta_integrated_wigner(const GeneralState& state, double p, int nodes = 0);
double theta_integrated_wigner(const TwoModeState& state, double p1, double p2, int nodes = 0);

/// int int V dtheta dp.
double phase_space_norm(const GeneralState& state, const PhaseSpaceOptions& options = {});
double phase_space_norm(const TwoModeState& state, const PhaseSpaceOptions& options = {});

}  // namespace oamwigner
