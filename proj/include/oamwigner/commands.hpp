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

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "oamwigner/closed_forms.hpp"
#include "oamwigner/grid.hpp"
#include "oamwigner/marginals.hpp"
#include "oamwigner/oracle.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

struct BellSpec {
  BellKind kind = BellKind::PhiPlus;
  int m0 = 1;
};

using StateInput =
    std::variant<QubitSpec, TwoQubitSpec, BellSpec, BlochDensity, GeneralState, TwoModeState>;

/// "m0,m1,alpha,beta[,delta]"
QubitSpec parse_qubit(const std::string& text);
/// "kind,m0", e.g. "psi-,1"
BellSpec parse_bell(const std::string& text);
/// "m0,m1,n0,n1,beta,gamma,phi,alpha10,alpha01,alpha11[,delta1,delta2]"
TwoQubitSpec parse_two_qubit(const std::string& text);
/// "m0,m1,a1,a2,a3[,delta]"
BlochDensity parse_density(const std::string& text);

int dimension(const StateInput& state);
std::string describe(const StateInput& state);

enum class EvalPath { Closed, Bilinear, Oracle };
enum class Scale { Raw, TwoPiD };

EvalPath parse_eval_path(const std::string& text);
Scale parse_scale(const std::string& text);
std::string to_string(EvalPath path);
std::string to_string(Scale scale);

/// Wigner function of `state` at coordinates in phase_axes(dimension) order.
/// Closed requires a qubit, two-qubit, Bell or density input.
double evaluate_wigner(const StateInput& state, std::span<const double> coordinates,
                       EvalPath path, const OracleOptions& oracle = {});

GridResult cmd_eval(const StateInput& state, const PhaseGrid& grid, EvalPath path, Scale scale,
                    const OracleOptions& oracle = {});

enum class MarginalAxis { Angle, Momentum };
MarginalAxis parse_marginal_axis(const std::string& text);

/// Grid axes are angle_axes(d) or momentum_axes(d).
GridResult cmd_marginal(const StateInput& state, MarginalAxis axis, const PhaseGrid& grid);

enum class ProbsMethod { Analytic, Quadrature };
ProbsMethod parse_probs_method(const std::string& text);

/// Mode probabilities keyed "m" (one mode) or "m,n" (two modes). The
/// quadrature method projects the momentum marginal onto sinc profiles.
nlohmann::json cmd_probs(const StateInput& state, ProbsMethod method,
                         const TruncationOptions& truncation = {});

enum class OverlapMethod { Direct, PhaseSpace };
OverlapMethod parse_overlap_method(const std::string& text);

/// tr(rho1 rho2) for two qubits, two densities, or one of each.
double cmd_overlap(const StateInput& first, const StateInput& second, OverlapMethod method,
                   const PhaseSpaceOptions& options = {});

struct VerifyReport {
  nlohmann::json json;
  bool passed = false;
};

/// Sinc identities at the given radius plus seeded cross-checks of the
/// evaluation paths, the Bell negativity value and the phase-space overlap.
VerifyReport cmd_verify(int radius, std::uint64_t seed);

struct NegativityReport {
  double min_value = 0.0;
  std::vector<std::pair<std::string, double>> argmin;
  double negative_fraction = 0.0;
  std::size_t samples = 0;
};

/// The first grid point attaining the minimum is reported.
NegativityReport cmd_negativity(const StateInput& state, const PhaseGrid& grid,
                                EvalPath path = EvalPath::Bilinear);
nlohmann::json to_json(const NegativityReport& report);

struct SpiralSample {
  double vartheta_plus;
  double theta1;
  double theta2;
};

/// 4 pi lcm(|m1 - m0|, |n1 - n0|): the vartheta_+ period of the spiral.
double spiral_period(const TorusSpiralSpec& spec);

/// Samples at vartheta_+ = k T / samples, k < samples, with the torus angles
/// reduced to [-pi, pi). Throws DegenerateModes.
std::vector<SpiralSample> cmd_spiral(const TorusSpiralSpec& spec, int samples,
                                     double vartheta_minus = 0.0);

void write_csv(std::ostream& out, const std::vector<SpiralSample>& spiral);
nlohmann::json to_json(const std::vector<SpiralSample>& spiral);

}  // namespace oamwigner
