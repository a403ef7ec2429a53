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

#include <numbers>

namespace oamwigner {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [-pi, pi) by subtracting the nearest multiple of 2 pi.
/// Throws InvalidArgument for non-finite input.
double reduce_angle(double theta);

/// A point (theta, p) of the cylinder phase space S^1 x R.
class PhasePoint {
 public:
  PhasePoint(double theta, double p);

  double theta() const { return theta_; }
  double p() const { return p_; }

 private:
  double theta_;
  double p_;
};

/// A point (theta1, theta2, p1, p2) of S^1 x S^1 x R^2.
class PhasePoint4 {
 public:
  PhasePoint4(double theta1, double theta2, double p1, double p2);

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }

  PhasePoint first() const { return {theta1_, p1_}; }
  PhasePoint second() const { return {theta2_, p2_}; }

 private:
  double theta1_;
  double theta2_;
  double p1_;
  double p2_;
};

}  // namespace oamwigner
