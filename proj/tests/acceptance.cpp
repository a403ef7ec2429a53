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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oamwigner/closed_forms.hpp"
#include "oamwigner/commands.hpp"
#include "oamwigner/marginals.hpp"
#include "oamwigner/oracle.hpp"
#include "oamwigner/phase_kernel.hpp"
#include "oamwigner/sampling.hpp"
#include "test_support.hpp"

using namespace oamwigner;
namespace ts = testing_support;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kInv2Pi = 1.0 / (2 * M_PI);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

/// Running maximum of |a - b|; NaN sticks.
struct MaxDiff {
  double value = 0.0;
  void add(double a, double b) {
    const double d = std::abs(a - b);
    if (std::isnan(d) || d > value) value = d;
  }
  void add(double d) { add(d, 0.0); }
  bool within(double tol) const { return value <= tol; }
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

Outcome triple_path() {
  const auto start = Clock::now();
  Sampler sampler(kSeed);
  MaxDiff closed_bilinear, vs_oracle;
  for (int i = 0; i < 100; ++i) {
    const QubitSpec q = sampler.qubit();
    const GeneralState s = qubit_to_state(q);
    for (int k = 0; k < 10; ++k) {
      const PhasePoint pt = sampler.point(s.max_abs_mode());
      const double closed = qubit_wigner(q, pt);
      const double bilinear = wigner_bilinear_1d(s, pt);
      const double oracle = oracle_wigner_1d(s, pt).value;
      closed_bilinear.add(closed, bilinear);
      vs_oracle.add(closed, oracle);
      vs_oracle.add(bilinear, oracle);
    }
  }
  for (int i = 0; i < 50; ++i) {
    const TwoQubitSpec q = sampler.two_qubit();
    const TwoModeState s = two_qubit_to_state(q);
    for (int k = 0; k < 10; ++k) {
      const PhasePoint4 pt = sampler.point4(s.max_abs_mode());
      const double closed = two_qubit_wigner(q, pt);
      const double bilinear = wigner_bilinear_2d(s, pt);
      const double oracle = oracle_wigner_2d(s, pt).value;
      closed_bilinear.add(closed, bilinear);
      vs_oracle.add(closed, oracle);
      vs_oracle.add(bilinear, oracle);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const GeneralState s = sampler.qudit(7, 8);
    for (int k = 0; k < 10; ++k) {
      const PhasePoint pt = sampler.point(s.max_abs_mode());
      vs_oracle.add(wigner_bilinear_1d(s, pt), oracle_wigner_1d(s, pt).value);
    }
  }
  const double elapsed = seconds_since(start);
  return {closed_bilinear.within(1e-12) && vs_oracle.within(1e-9) && elapsed < 30.0,
          fmt("closed-bilinear %.2e (tol 1e-12), vs oracle %.2e (tol 1e-9), %.2f s (limit 30 s)",
              closed_bilinear.value, vs_oracle.value, elapsed)};
}

Outcome reference_grids() {
  struct Fixture {
    const char* name;
    StateInput state;
    std::string grid;
    int dimension;
    std::function<double(std::span<const double>)> reference;
  };
  const double held_theta2 = 0.4;
  const std::vector<Fixture> fixtures{
      {"even cat", QubitSpec{1, -1, 0.0, M_PI / 4, 0.0}, "theta=-pi:pi:64,p=-3:3:121", 1,
       [](std::span<const double> x) { return ts::even_cat(x[0], x[1]); }},
      {"unequal qubit", QubitSpec{1, 0, 0.0, M_PI / 3, 0.0}, "theta=-pi:pi:64,p=-3:3:121", 1,
       [](std::span<const double> x) { return ts::unequal_qubit(x[0], x[1]); }},
      {"singlet p2=1/2", BellSpec{BellKind::PsiMinus, 1}, "theta1=-pi:pi:64,theta2=0.4,p1=-3:3:121,p2=0.5",
       2, [=](std::span<const double> x) { return ts::singlet_half_slice(x[0], held_theta2, x[2]); }},
      {"singlet p2=0", BellSpec{BellKind::PsiMinus, 1}, "theta1=-pi:pi:64,theta2=0.4,p1=-3:3:121,p2=0",
       2, [=](std::span<const double> x) { return ts::singlet_zero_slice(x[0], held_theta2, x[2]); }},
  };
  bool passed = true;
  std::ostringstream detail;
  for (const auto& f : fixtures) {
    const auto start = Clock::now();
    const PhaseGrid grid = PhaseGrid::parse(f.grid, phase_axes(f.dimension));
    const GridResult result = cmd_eval(f.state, grid, EvalPath::Closed, Scale::TwoPiD);
    const std::vector<double> expected = grid.evaluate(f.reference);
    MaxDiff diff;
    for (std::size_t k = 0; k < expected.size(); ++k) diff.add(result.values[k], expected[k]);
    const double elapsed = seconds_since(start);
    passed = passed && diff.within(1e-12) && elapsed < 5.0 && expected.size() == 64 * 121;
    detail << f.name << " " << fmt("%.2e/%.3fs", diff.value, elapsed) << " ";
  }
  detail << "(tol 1e-12, 64x121, limit 5 s)";
  return {passed, detail.str()};
}

Outcome bell_values() {
  const double target = -1.0 / (4 * M_PI * M_PI);
  MaxDiff minimum;
  const TwoModeState psi = bell_state(BellKind::PsiMinus, 1);
  for (double theta : {-2.0, 0.0, 0.3, 1.7}) {
    const PhasePoint4 pt(theta, theta, 0.0, 0.0);
    minimum.add(bell_wigner(BellKind::PsiMinus, 1, pt), target);
    minimum.add(oracle_wigner_2d(psi, pt).value, target);
  }
  // At (p1, p2) = (m0, -m0) and (-m0, m0) the value is 1/(8 pi^2), not zero.
  MaxDiff zeros, support;
  for (BellKind kind : {BellKind::PsiPlus, BellKind::PsiMinus}) {
    for (int m0 : {1, 2}) {
      for (int p1 = -4; p1 <= 4; ++p1) {
        for (int p2 = -4; p2 <= 4; ++p2) {
          if (p1 == 0 || p2 == 0) continue;
          for (double t : {-1.1, 0.0, 2.4}) {
            const double v = bell_wigner(kind, m0, PhasePoint4(t, 0.5 * t - 0.3, p1, p2));
            if (p1 == -p2 && std::abs(p1) == m0) {
              support.add(v, 0.5 * kInv2Pi * kInv2Pi);
            } else {
              zeros.add(v);
            }
          }
        }
      }
    }
  }
  return {minimum.within(1e-9) && zeros.within(1e-12) && support.within(1e-12),
          fmt("minimum dev %.2e (tol 1e-9), zeros %.2e (tol 1e-12), "
              "support points (+-m0,-+m0) dev from 1/(8pi^2) %.2e",
              minimum.value, zeros.value, support.value)};
}

Outcome marginals() {
  Sampler sampler(kSeed + 4);
  MaxDiff p_integrated, theta_integrated;
  std::vector<GeneralState> singles{qubit_to_state({1, 0, 0.0, M_PI / 3, 0.0}),
                                    qubit_to_state(sampler.qubit(4)), sampler.qudit(4, 4)};
  for (const auto& s : singles) {
    for (int k = 0; k < 64; ++k) {
      const double theta = -M_PI + k * (2 * M_PI / 64);
      p_integrated.add(p_integrated_wigner(s, theta), marginal_angle(s, theta));
    }
  }
  BellFamilySpec family;
  family.angle = 0.7;
  family.phase = 1.3;
  const TwoModeState pair = two_qubit_to_state(to_two_qubit_spec(family));
  for (int k = 0; k < 64; ++k) {
    const double theta1 = -M_PI + k * (2 * M_PI / 64);
    p_integrated.add(p_integrated_wigner(pair, theta1, 0.6), marginal_angle(pair, theta1, 0.6));
  }
  for (int i = 0; i < 20; ++i) {
    const GeneralState s = sampler.qudit();
    const TwoModeState t = two_qubit_to_state(sampler.two_qubit());
    for (int k = 0; k < 10; ++k) {
      const double p = sampler.uniform(-10, 10), q = sampler.uniform(-8, 8);
      theta_integrated.add(theta_integrated_wigner(s, p), marginal_momentum(s, p));
      theta_integrated.add(theta_integrated_wigner(t, p, q), marginal_momentum(t, p, q));
    }
  }
  return {p_integrated.within(1e-3) && theta_integrated.within(1e-12),
          fmt("p-integrated vs angular density %.2e (tol 1e-3, L=1000), "
              "theta-integrated vs momentum marginal %.2e (tol 1e-12)",
              p_integrated.value, theta_integrated.value)};
}

Outcome probabilities() {
  TruncationOptions options;
  options.radius = 1000;
  MaxDiff diff;
  const GeneralState unequal_qubit = qubit_to_state({1, 0, 0.0, M_PI / 3, 0.0});
  const std::vector<int> modes{1, 0};
  const auto p = extract_oam_probabilities(WhittakerProfile::from_state(unequal_qubit), modes, options);
  diff.add(p.at(1), 0.25);
  diff.add(p.at(0), 0.75);
  for (BellKind kind :
       {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    const TwoModeState bell = bell_state(kind, 1);
    std::vector<ModePair> pairs;
    for (const auto& c : bell.coefficients()) pairs.push_back({c.m, c.n});
    const auto q = extract_oam_probabilities(WhittakerProfile2D::from_state(bell), pairs, options);
    for (const auto& pair : pairs) diff.add(q.at(pair), 0.5);
  }
  return {diff.within(1e-3), fmt("max deviation %.2e (tol 1e-3, L=1000)", diff.value)};
}

Outcome overlaps() {
  Sampler sampler(kSeed + 5);
  MaxDiff general, aligned;
  for (int i = 0; i < 50; ++i) {
    const QubitSpec a = sampler.qubit();
    QubitSpec b = a;
    b.beta = sampler.uniform(0, M_PI / 2);
    if (i % 5 != 0) {
      b.alpha = sampler.uniform(0, 2 * M_PI);
    }
    const double phase_space = transition_probability_phase_space(a, b);
    general.add(phase_space, transition_probability_direct(a, b));
    if (b.alpha == a.alpha) {
      aligned.add(phase_space, std::pow(std::cos(a.beta - b.beta), 2));
    }
  }
  bool purity = true;
  for (int i = 0; i < 1000; ++i) {
    const BlochDensity rho = sampler.bloch();
    const double x = density_overlap(rho, rho);
    purity = purity && x >= 0.5 && x <= 1.0;
  }
  return {general.within(1e-3) && aligned.within(1e-3) && purity,
          fmt("phase-space vs direct %.2e, alpha=alpha_hat vs cos^2 %.2e (tol 1e-3), "
              "purity bounds %s",
              general.value, aligned.value, purity ? "hold" : "violated")};
}

GeneralState with_delta(const GeneralState& s, double delta) {
  const auto c = s.coefficients();
  return GeneralState({c.begin(), c.end()}, delta);
}

Outcome delta_covariance() {
  Sampler sampler(kSeed + 6);
  MaxDiff shift, profile;
  for (int i = 0; i < 50; ++i) {
    const GeneralState base = with_delta(sampler.qudit(), 0.0);
    const double p0 = sampler.uniform(-8, 8);
    for (double delta : {0.1, 0.25, 0.5, 0.9}) {
      const GeneralState shifted = with_delta(base, delta);
      for (int k = 0; k < 16; ++k) {
        const double theta = -M_PI + k * (2 * M_PI / 16);
        const double p = p0 + sampler.uniform(-1, 1);
        shift.add(wigner_bilinear_1d(shifted, PhasePoint(theta, p)),
                  wigner_bilinear_1d(base, PhasePoint(theta, p - delta)));
        // Interference part: the full value minus the diagonal sincs.
        const auto interference = [](const GeneralState& s, double t, double q) {
          return wigner_bilinear_1d(s, PhasePoint(t, q)) - kInv2Pi * marginal_momentum(s, q);
        };
        profile.add(interference(shifted, theta, p0 + delta), interference(base, theta, p0));
      }
    }
  }
  return {shift.within(1e-12) && profile.within(1e-12),
          fmt("shift covariance %.2e, interference profile %.2e (tol 1e-12)", shift.value,
              profile.value)};
}

int matrix_rank(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

Outcome properties() {
  Sampler sampler(kSeed + 7);
  double imaginary = 0.0;
  double scaled_peak = 0.0;  // max (2pi)^d |V|
  auto track = [&](std::complex<double> sum, int d) {
    imaginary = std::max(imaginary, std::abs(sum.imag()));
    scaled_peak = std::max(scaled_peak, std::pow(2 * M_PI, d) * std::abs(sum.real()));
  };
  for (int i = 0; i < 1000; ++i) {
    const GeneralState s = sampler.qudit();
    track(bilinear_sum_1d(s, sampler.point(s.max_abs_mode())), 1);
    const GeneralState q = qubit_to_state(sampler.qubit());
    track(bilinear_sum_1d(q, sampler.point(q.max_abs_mode())), 1);
    const TwoModeState t = two_qubit_to_state(sampler.two_qubit());
    track(bilinear_sum_2d(t, sampler.point4(t.max_abs_mode())), 2);
  }
  const bool real = imaginary < 1e-12;
  const bool bounded = scaled_peak <= 1.0 + 1e-12;

  MaxDiff norm;
  for (int i = 0; i < 3; ++i) {
    norm.add(phase_space_norm(qubit_to_state(sampler.qubit())), 1.0);
    norm.add(phase_space_norm(two_qubit_to_state(sampler.two_qubit(3))), 1.0);
  }
  norm.add(phase_space_norm(sampler.qudit(4, 4)), 1.0);

  MaxDiff factor;
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
    factor.add(wigner_bilinear_2d(ab, pt),
               wigner_bilinear_1d(a, pt.first()) * wigner_bilinear_1d(b, pt.second()));
  }

  int min_rank = 64;
  for (BellKind kind :
       {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    Eigen::MatrixXd m(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        m(i, j) = bell_wigner(kind, 1, PhasePoint4(-M_PI + i * M_PI / 4 + 0.1,
                                                   -M_PI + j * M_PI / 4 + 0.05, 0.0, 0.0));
      }
    }
    min_rank = std::min(min_rank, matrix_rank(m));
  }

  return {real && bounded && norm.within(1e-3) && factor.within(1e-12) && min_rank >= 2,
          fmt("imaginary residue %.2e (tol 1e-12); max (2pi)^d|V| = %.6f (limit 1 + 1e-12)%s; "
              "normalization %.2e (tol 1e-3); factorization %.2e (tol 1e-12); Bell rank %d (>= 2)",
              imaginary, scaled_peak, bounded ? "" : " EXCEEDED", norm.value, factor.value,
              min_rank)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"triple-path agreement", triple_path},  {"reference grids", reference_grids},
      {"Bell extreme values", bell_values},    {"marginals", marginals},
      {"probability extraction", probabilities}, {"overlap equality", overlaps},
      {"delta covariance", delta_covariance},  {"property suite", properties},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", outcome.passed ? "PASS" : "FAIL", index++, c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
