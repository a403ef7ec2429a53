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

#include "oamwigner/phase_point.hpp"

#include <cmath>

#include "oamwigner/errors.hpp"

namespace oamwigner {

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw InvalidArgument("angle must be finite");
  }
  double r = theta - kTwoPi * std::nearbyint(theta / kTwoPi);
  if (r >= kPi) {
    r -= kTwoPi;
  } else if (r < -kPi) {
    r += kTwoPi;
  }
  return r;
}

namespace {

double checked_momentum(double p) {
  if (!std::isfinite(p)) {
    throw InvalidArgument("momentum must be finite");
  }
  return p;
}

}  // namespace

PhasePoint::PhasePoint(double theta, double p)
    : theta_(reduce_angle(theta)), p_(checked_momentum(p)) {}

PhasePoint4::PhasePoint4(double theta1, double theta2, double p1, double p2)
    : theta1_(reduce_angle(theta1)),
      theta2_(reduce_angle(theta2)),
      p1_(checked_momentum(p1)),
      p2_(checked_momentum(p2)) {}

}  // namespace oamwigner
