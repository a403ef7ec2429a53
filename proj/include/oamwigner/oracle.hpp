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
#include <vector>

#include "oamwigner/phase_point.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

// Ground-truth Wigner values obtained by integrating
//   (1/2pi) int_{-pi}^{pi} dv/2pi e^{-ipv} conj(psi(theta - v/2)) psi(theta + v/2)
// numerically, with psi built from the coefficient expansion. Nothing here
// touches the kernel or the closed forms.

struct OracleOptions {
  /// Nodes per axis, split evenly over `panels` Gauss-Legendre panels.
  int nodes = 512;
  int panels = 8;
  /// Maximum change allowed when the node count is doubled.
  double convergence_tolerance = 1e-9;
  bool require_convergence = true;
};

struct OracleResult {
  double value;           // real part at 2 * nodes
  double error_estimate;  // |I(2 nodes) - I(nodes)|
  double imaginary_part;  // at 2 * nodes; zero in exact arithmetic
  int nodes;
};

/// Smallest admissible node count for modes up to max_abs_mode.
int minimum_oracle_nodes(int max_abs_mode);

/// Throws InvalidArgument when nodes is below minimum_oracle_nodes or not a
/// multiple of panels, and QuadratureNotConverged when the doubling check
/// fails (unless require_convergence is false).
OracleResult oracle_wigner_1d(const GeneralState& state, const PhasePoint& point,
                              const OracleOptions& options = {});
OracleResult oracle_wigner_2d(const TwoModeState& state, const PhasePoint4& point,
                              const OracleOptions& options = {});

/// Mixed qubit via its spectral decomposition into pure states.
OracleResult oracle_wigner_density(const BlochDensity& rho, const PhasePoint& point,
                                   const OracleOptions& options = {});

struct IdentityCheck {
  std::string category;  // single_sinc, sinc_squared, orthonormality
  std::string name;
  double expected;
  double computed;
  double tolerance;

  double deviation() const;
  bool passed() const;
};

struct SincIdentityReport {
  int radius;
  std::vector<IdentityCheck> checks;

  double max_deviation() const;
  double max_deviation(const std::string& category) const;
  bool passed() const;
};

/// Checks int sinc pi(p+a) dp = 1 (endpoint averaged), int sinc^2 pi(p+a) dp = 1
/// and int sinc pi(p-m) sinc pi(p-n) dp = delta_mn at the given truncation
/// radius (>= 100), all against tolerance 1e-3.
SincIdentityReport verify_sinc_identities(int radius);

}  // namespace oamwigner
