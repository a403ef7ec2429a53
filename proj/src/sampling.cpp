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

#include "oamwigner/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oamwigner {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

QubitSpec Sampler::qubit(int max_mode) {
  QubitSpec spec;
  spec.m0 = integer(-max_mode, max_mode);
  do {
    spec.m1 = integer(-max_mode, max_mode);
  } while (spec.m1 == spec.m0);
  spec.alpha = uniform(0.0, kTwoPi);
  spec.beta = uniform(0.0, kPi / 2);
  spec.delta = uniform(0.0, 1.0);
  return spec;
}

TwoQubitSpec Sampler::two_qubit(int max_mode) {
  TwoQubitSpec spec;
  spec.m0 = integer(-max_mode, max_mode);
  do {
    spec.m1 = integer(-max_mode, max_mode);
  } while (spec.m1 == spec.m0);
  spec.n0 = integer(-max_mode, max_mode);
  do {
    spec.n1 = integer(-max_mode, max_mode);
  } while (spec.n1 == spec.n0);
  const double beta = uniform(0.0, kPi);
  const double gamma = uniform(0.0, kPi);
  const double phi = uniform(0.0, kTwoPi);
  spec.b = amplitudes_from_angles(beta, gamma, phi);
  spec.alpha10 = uniform(0.0, kTwoPi);
  spec.alpha01 = uniform(0.0, kTwoPi);
  spec.alpha11 = uniform(0.0, kTwoPi);
  spec.delta1 = uniform(0.0, 1.0);
  spec.delta2 = uniform(0.0, 1.0);
  return spec;
}

GeneralState Sampler::qudit(int max_support, int max_mode) {
  std::vector<int> pool;
  for (int m = -max_mode; m <= max_mode; ++m) {
    pool.push_back(m);
  }
  std::shuffle(pool.begin(), pool.end(), engine_);
  const int support = integer(1, std::min<int>(max_support, static_cast<int>(pool.size())));
  std::normal_distribution<double> gauss;
  std::vector<ModeAmplitude> coefficients;
  for (int k = 0; k < support; ++k) {
    const double re = gauss(engine_);
    const double im = gauss(engine_);
    coefficients.push_back({pool[static_cast<std::size_t>(k)], {re, im}});
  }
  return GeneralState::normalized(std::move(coefficients), uniform(0.0, 1.0));
}

BlochDensity Sampler::bloch(int max_mode) {
  BlochDensity rho;
  rho.m0 = integer(-max_mode, max_mode);
  do {
    rho.m1 = integer(-max_mode, max_mode);
  } while (rho.m1 == rho.m0);
  std::normal_distribution<double> gauss;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double r = 0.0;
  do {
    x = gauss(engine_);
    y = gauss(engine_);
    z = gauss(engine_);
    r = std::sqrt(x * x + y * y + z * z);
  } while (r == 0.0);
  const double radius = std::cbrt(uniform(0.0, 1.0));
  rho.a = {radius * x / r, radius * y / r, radius * z / r};
  rho.delta = uniform(0.0, 1.0);
  return rho;
}

PhasePoint Sampler::point(int max_abs_mode) {
  const double reach = max_abs_mode + 2.0;
  const double theta = uniform(-kPi, kPi);
  return PhasePoint(theta, uniform(-reach, reach));
}

PhasePoint4 Sampler::point4(int max_abs_mode) {
  const double reach = max_abs_mode + 2.0;
  const double theta1 = uniform(-kPi, kPi);
  const double theta2 = uniform(-kPi, kPi);
  const double p1 = uniform(-reach, reach);
  return PhasePoint4(theta1, theta2, p1, uniform(-reach, reach));
}

}  // namespace oamwigner
