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
#include <random>

#include "oamwigner/phase_point.hpp"
#include "oamwigner/state.hpp"

namespace oamwigner {

/// Seeded generator of random states and phase points for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  std::mt19937_64& engine() { return engine_; }

  /// Distinct modes in [-max_mode, max_mode], beta in [0, pi/2], delta in [0, 1).
  QubitSpec qubit(int max_mode = 8);
  /// beta, gamma in [0, pi), phi and phases in [0, 2 pi).
  TwoQubitSpec two_qubit(int max_mode = 6);
  /// Support of 1..max_support distinct modes with complex Gaussian weights.
  GeneralState qudit(int max_support = 7, int max_mode = 8);
  /// Uniform in the unit ball.
  BlochDensity bloch(int max_mode = 8);

  /// theta in [-pi, pi), p within max_abs_mode + 2 of the origin.
  PhasePoint point(int max_abs_mode);
  PhasePoint4 point4(int max_abs_mode);

 private:
  std::mt19937_64 engine_;
};

}  // namespace oamwigner
