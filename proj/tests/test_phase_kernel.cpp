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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_kernel.hpp"
#include "oamwigner/sampling.hpp"
#include "test_support.hpp"

using namespace oamwigner;
using testing_support::plain_sinc;

namespace {

constexpr double kInv2Pi = 1.0 / (2 * M_PI);
// Cauchy-Schwarz on the v-integral of conj(psi(theta - v/2)) psi(theta + v/2)
// over a window of length 2 pi: |V| <= 1/pi per mode.
constexpr double kBound = 1.0 / M_PI;

long double reference_sinc(double x) {
  if (x == 0.0) return 1.0L;
  const long double xl = x;
  const long double r = std::fmod(xl, 2.0L);  // exact
  const long double pi = 3.141592653589793238462643383279502884L;
  return std::sin(pi * r) / (pi * xl);
}

}  // namespace

TEST(SincPi, Examples) {
  EXPECT_EQ(sinc_pi(0.0), 1.0);
  EXPECT_EQ(sinc_pi(3.0), 0.0);
  EXPECT_EQ(sinc_pi(-7.0), 0.0);
  EXPECT_NEAR(sinc_pi(0.5), 2.0 / M_PI, 1e-16);
  EXPECT_NEAR(sinc_pi(0.5), 0.636619772, 1e-9);
}

TEST(SincPi, RelativeErrorWithinTwoUlps) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-12.0, 6.0);
  std::bernoulli_distribution sign;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 20000; ++i) {
    const double x = (sign(rng) ? -1 : 1) * std::pow(10.0, exponent(rng));
    const long double ref = reference_sinc(x);
    const double got = sinc_pi(x);
    ASSERT_LE(std::fabs(static_cast<long double>(got) - ref), 2 * eps * std::fabs(ref))
        << "x = " << x;
  }
}

TEST(SincPi, SmallArgumentsUseTheLimit) {
  EXPECT_EQ(sinc_pi(1e-300), 1.0);
  EXPECT_NEAR(sinc_pi(1e-6), 1.0 - (M_PI * 1e-6) * (M_PI * 1e-6) / 6, 1e-20);
  EXPECT_EQ(sinc_pi(2e-5), sinc_pi(-2e-5));
}

TEST(KernelElement, Examples) {
  EXPECT_NEAR(kernel_element(0, 0, 0.0, PhasePoint(1.234, 0.0)).value.real(), kInv2Pi, 1e-16);
  const auto v = kernel_element(0, 1, 0.0, PhasePoint(0.0, 0.5)).value;
  EXPECT_NEAR(v.real(), kInv2Pi, 1e-16);
  EXPECT_NEAR(v.imag(), 0.0, 1e-16);
  EXPECT_NEAR(kernel_element(0, 0, 0.3, PhasePoint(-2.0, 0.3)).value.real(), kInv2Pi, 1e-16);
}

TEST(KernelElement, HermitianAndBounded) {
  Sampler sampler(11);
  for (int i = 0; i < 2000; ++i) {
    const int m = sampler.integer(-10, 10);
    const int n = sampler.integer(-10, 10);
    const double delta = sampler.uniform(0.0, 1.0);
    const PhasePoint pt = sampler.point(10);
    const auto a = kernel_element(m, n, delta, pt).value;
    const auto b = kernel_element(n, m, delta, pt).value;
    EXPECT_EQ(a, std::conj(b));
    EXPECT_LE(std::abs(a), kInv2Pi * (1 + 1e-15));
  }
}

TEST(KernelElement, DeltaShiftIsExact) {
  Sampler sampler(12);
  for (int i = 0; i < 2000; ++i) {
    const int m = sampler.integer(-10, 10);
    const int n = sampler.integer(-10, 10);
    const double delta = sampler.uniform(0.0, 1.0);
    const double theta = sampler.uniform(-M_PI, M_PI);
    const double p = sampler.uniform(-12.0, 12.0);
    EXPECT_EQ(kernel_element(m, n, delta, PhasePoint(theta, p)).value,
              kernel_element(m, n, 0.0, PhasePoint(theta, p - delta)).value);
  }
}

TEST(KernelElement, MatchesDefinition) {
  Sampler sampler(13);
  for (int i = 0; i < 500; ++i) {
    const int m = sampler.integer(-6, 6);
    const int n = sampler.integer(-6, 6);
    const double delta = sampler.uniform(0.0, 1.0);
    const PhasePoint pt = sampler.point(6);
    const auto v = kernel_element(m, n, delta, pt).value;
    const double s = plain_sinc(pt.p() - (m + n + 2 * delta) / 2);
    EXPECT_NEAR(v.real(), std::cos((n - m) * pt.theta()) * s * kInv2Pi, 1e-14);
    EXPECT_NEAR(v.imag(), std::sin((n - m) * pt.theta()) * s * kInv2Pi, 1e-14);
  }
}

TEST(WignerBilinear1D, Examples) {
  const GeneralState e1({{1, 1.0}});
  EXPECT_NEAR(wigner_bilinear_1d(e1, PhasePoint(0.7, 1.0)), kInv2Pi, 1e-16);
  const double r = 1 / std::sqrt(2.0);
  const GeneralState cat({{1, r}, {-1, r}});
  EXPECT_NEAR(wigner_bilinear_1d(cat, PhasePoint(0.0, 0.0)), kInv2Pi, 1e-15);
  EXPECT_NEAR(wigner_bilinear_1d(cat, PhasePoint(M_PI / 4, 0.0)), 0.0, 1e-16);
}

TEST(WignerBilinear1D, MatchesEvenCatFormula) {
  const double r = 1 / std::sqrt(2.0);
  const GeneralState cat({{1, r}, {-1, r}});
  for (double theta = -3.1; theta < 3.1; theta += 0.37) {
    for (double p = -3; p <= 3; p += 0.29) {
      EXPECT_NEAR(2 * M_PI * wigner_bilinear_1d(cat, PhasePoint(theta, p)),
                  testing_support::even_cat(theta, p), 1e-12);
    }
  }
}

TEST(WignerBilinear1D, RealityAndBoundedness) {
  Sampler sampler(14);
  for (int i = 0; i < 1000; ++i) {
    const GeneralState s = sampler.qudit();
    const PhasePoint pt = sampler.point(s.max_abs_mode());
    const auto sum = bilinear_sum_1d(s, pt);
    EXPECT_LT(std::abs(sum.imag()), 1e-12);
    EXPECT_LE(std::abs(sum.real()), kBound + 1e-12);
  }
}

TEST(WignerBilinear1D, InterferencePeakExceedsSingleElementBound) {
  // Adjacent modes interfere at the half-integer momentum, where the value
  // goes above 1/2pi while staying under 1/pi.
  const GeneralState s({{1, 0.5}, {0, std::sqrt(3.0) / 2}});
  const double v = wigner_bilinear_1d(s, PhasePoint(0.0, 0.5));
  EXPECT_NEAR(2 * M_PI * v, 2 / M_PI + std::sqrt(3.0) / 2, 1e-14);
  EXPECT_GT(v, kInv2Pi);
  EXPECT_LT(v, kBound);
}

TEST(WignerBilinear1D, RejectsUnnormalizedStates) {
  EXPECT_THROW(GeneralState({{0, 1.0}, {1, 0.5}}), NonNormalizedState);
  EXPECT_THROW(GeneralState({}), NonNormalizedState);
}

TEST(WignerBilinear2D, Examples) {
  const TwoModeState basis({{2, -3, 1.0}});
  EXPECT_NEAR(wigner_bilinear_2d(basis, PhasePoint4(0.4, -2.2, 2.0, -3.0)),
              kInv2Pi * kInv2Pi, 1e-17);

  const TwoModeState psi_minus = bell_state(BellKind::PsiMinus, 1);
  for (double theta : {-2.5, 0.0, 0.3, 1.9}) {
    EXPECT_NEAR(wigner_bilinear_2d(psi_minus, PhasePoint4(theta, theta, 0.0, 0.0)),
                -1.0 / (4 * M_PI * M_PI), 1e-15);
  }
  for (double p1 : {-2.0, -1.0, 1.0, 3.0}) {
    for (double p2 : {-3.0, 2.0}) {
      EXPECT_NEAR(wigner_bilinear_2d(psi_minus, PhasePoint4(0.3, -1.7, p1, p2)), 0.0, 1e-12);
    }
  }
}

TEST(WignerBilinear2D, RealityAndBoundedness) {
  Sampler sampler(15);
  for (int i = 0; i < 1000; ++i) {
    const TwoModeState s = two_qubit_to_state(sampler.two_qubit());
    const PhasePoint4 pt = sampler.point4(s.max_abs_mode());
    const auto sum = bilinear_sum_2d(s, pt);
    EXPECT_LT(std::abs(sum.imag()), 1e-12);
    EXPECT_LE(std::abs(sum.real()), kBound * kBound + 1e-12);
  }
}

TEST(WignerBilinear2D, ProductStatesFactorize) {
  Sampler sampler(16);
  for (int i = 0; i < 100; ++i) {
    const GeneralState a = sampler.qudit(4, 5);
    const GeneralState b = sampler.qudit(4, 5);
    std::vector<ModePairAmplitude> product;
    for (const auto& x : a.coefficients()) {
      for (const auto& y : b.coefficients()) {
        product.push_back({x.mode, y.mode, x.amplitude * y.amplitude});
      }
    }
    const TwoModeState ab = TwoModeState::normalized(product, a.delta(), b.delta());
    const PhasePoint4 pt = sampler.point4(7);
    EXPECT_NEAR(wigner_bilinear_2d(ab, pt),
                wigner_bilinear_1d(a, pt.first()) * wigner_bilinear_1d(b, pt.second()), 1e-12);
  }
}

TEST(WignerBilinearDensity, PureCaseMatchesStateSum) {
  Sampler sampler(17);
  for (int i = 0; i < 200; ++i) {
    const QubitSpec q = sampler.qubit();
    const PhasePoint pt = sampler.point(8);
    EXPECT_NEAR(wigner_bilinear_density(density_from_qubit(q), pt),
                wigner_bilinear_1d(qubit_to_state(q), pt), 1e-12);
  }
}

TEST(PhasePoint, ReducesAngles) {
  EXPECT_NEAR(PhasePoint(3 * M_PI / 2, 0).theta(), -M_PI / 2, 1e-15);
  EXPECT_EQ(PhasePoint(M_PI, 0).theta(), -M_PI);
  EXPECT_EQ(PhasePoint(-M_PI, 0).theta(), -M_PI);
  EXPECT_NEAR(PhasePoint(100.0, 0).theta(), 100.0 - 32 * M_PI, 1e-13);
  const PhasePoint4 q(7.0, -7.0, 1.0, 2.0);
  EXPECT_NEAR(q.theta1(), 7.0 - 2 * M_PI, 1e-15);
  EXPECT_NEAR(q.theta2(), -7.0 + 2 * M_PI, 1e-15);
  EXPECT_THROW(PhasePoint(std::nan(""), 0.0), InvalidArgument);
  EXPECT_THROW(PhasePoint(0.0, INFINITY), InvalidArgument);
  EXPECT_THROW(PhasePoint4(0.0, 0.0, 0.0, NAN), InvalidArgument);
}
