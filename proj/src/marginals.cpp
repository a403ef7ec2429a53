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

#include "oamwigner/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "oamwigner/closed_forms.hpp"
#include "oamwigner/errors.hpp"
#include "oamwigner/phase_kernel.hpp"

namespace oamwigner {

namespace {

// int sinc pi(p - a) sinc pi(p - b) dp, truncated without averaging.
double sinc_product_integral(double a, double b, const TruncationOptions& options) {
  const auto integral = integrate_truncated(
      [a, b](double p) { return sinc_pi(p - a) * sinc_pi(p - b); }, options,
      TailTreatment::Plain);
  require_converged(integral, options, "sinc product integral");
  return integral.value;
}

// Memoizes truncated integrals keyed by their (exactly reproducible) centres.
class SincIntegralCache {
 public:
  explicit SincIntegralCache(const TruncationOptions& options) : options_(options) {}

  double single(double center) {
    auto [it, inserted] = single_.try_emplace(center, 0.0);
    if (inserted) {
      it->second = truncated_sinc_integral(center, options_);
    }
    return it->second;
  }

  double product(double a, double b) {
    auto [it, inserted] = product_.try_emplace({std::min(a, b), std::max(a, b)}, 0.0);
    if (inserted) {
      it->second = sinc_product_integral(a, b, options_);
    }
    return it->second;
  }

 private:
  TruncationOptions options_;
  std::map<double, double> single_;
  std::map<std::pair<double, double>, double> product_;
};

void require_same_subspace(int m0, int m1, double delta, int n0, int n1, double delta_hat) {
  if (m0 != n0 || m1 != n1 || delta != delta_hat) {
    throw SubspaceMismatch("both states must share (m0, m1, delta)");
  }
}

int resolve_nodes(int requested, int max_abs_mode) {
  if (requested < 0) {
    throw InvalidArgument("theta node count must be non-negative");
  }
  return requested > 0 ? requested : periodic_node_count(max_abs_mode);
}

template <class WignerAt>
double phase_space_product(WignerAt&& first, WignerAt&& second, int theta_nodes,
                           const TruncationOptions& options) {
  const auto integral = integrate_truncated(
      [&](double p) {
        return integrate_periodic(
            [&](double theta) {
              const PhasePoint point(theta, p);
              return first(point) * second(point);
            },
            theta_nodes);
      },
      options, TailTreatment::Plain);
  require_converged(integral, options, "phase-space overlap");
  return kTwoPi * integral.value;
}

}  // namespace

double marginal_angle(const GeneralState& state, double theta) {
  return std::norm(state.wave_function(theta)) / kTwoPi;
}

double marginal_angle(const TwoModeState& state, double theta1, double theta2) {
  return std::norm(state.wave_function(theta1, theta2)) / (kTwoPi * kTwoPi);
}

double marginal_momentum(const GeneralState& state, double p) {
  double total = 0.0;
  for (const auto& c : state.coefficients()) {
    total += std::norm(c.amplitude) * sinc_pi((p - state.delta()) - c.mode);
  }
  return total;
}

double marginal_momentum(const TwoModeState& state, double p1, double p2) {
  double total = 0.0;
  for (const auto& c : state.coefficients()) {
    total += std::norm(c.amplitude) * sinc_pi((p1 - state.delta1()) - c.m) *
             sinc_pi((p2 - state.delta2()) - c.n);
  }
  return total;
}

WhittakerProfile WhittakerProfile::from_state(const GeneralState& state) {
  WhittakerProfile profile;
  profile.delta = state.delta();
  for (const auto& c : state.coefficients()) {
    profile.weights[c.mode] = std::norm(c.amplitude);
  }
  return profile;
}

double WhittakerProfile::operator()(double p) const {
  double total = 0.0;
  for (const auto& [mode, weight] : weights) {
    total += weight * sinc_pi((p - delta) - mode);
  }
  return total;
}

WhittakerProfile2D WhittakerProfile2D::from_state(const TwoModeState& state) {
  WhittakerProfile2D profile;
  profile.delta1 = state.delta1();
  profile.delta2 = state.delta2();
  for (const auto& c : state.coefficients()) {
    profile.weights[{c.m, c.n}] = std::norm(c.amplitude);
  }
  return profile;
}

double WhittakerProfile2D::operator()(double p1, double p2) const {
  double total = 0.0;
  for (const auto& [modes, weight] : weights) {
    total += weight * sinc_pi((p1 - delta1) - modes.first) * sinc_pi((p2 - delta2) - modes.second);
  }
  return total;
}

std::map<int, double> extract_oam_probabilities(const GeneralState& state,
                                                std::span<const int> modes) {
  std::map<int, double> out;
  for (int m : modes) {
    out[m] = std::norm(state.amplitude(m));
  }
  return out;
}

std::map<ModePair, double> extract_oam_probabilities(const TwoModeState& state,
                                                     std::span<const ModePair> modes) {
  std::map<ModePair, double> out;
  for (const auto& [m, n] : modes) {
    out[{m, n}] = std::norm(state.amplitude(m, n));
  }
  return out;
}

std::map<int, double> extract_oam_probabilities(const std::function<double(double)>& profile,
                                                double delta, std::span<const int> modes,
                                                const TruncationOptions& options) {
  std::map<int, double> out;
  for (int m : modes) {
    const double center = delta + m;
    const auto integral = integrate_truncated(
        [&](double p) { return profile(p) * sinc_pi(p - center); }, options, TailTreatment::Plain);
    require_converged(integral, options, "OAM probability projection");
    out[m] = integral.value;
  }
  return out;
}

std::map<int, double> extract_oam_probabilities(const WhittakerProfile& profile,
                                                std::span<const int> modes,
                                                const TruncationOptions& options) {
  return extract_oam_probabilities([&profile](double p) { return profile(p); }, profile.delta,
                                   modes, options);
}

std::map<ModePair, double> extract_oam_probabilities(const WhittakerProfile2D& profile,
                                                     std::span<const ModePair> modes,
                                                     const TruncationOptions& options) {
  SincIntegralCache first_axis(options);
  SincIntegralCache second_axis(options);
  std::map<ModePair, double> out;
  for (const auto& [m, n] : modes) {
    double total = 0.0;
    for (const auto& [term, weight] : profile.weights) {
      total += weight *
               first_axis.product(profile.delta1 + term.first, profile.delta1 + m) *
               second_axis.product(profile.delta2 + term.second, profile.delta2 + n);
    }
    out[{m, n}] = total;
  }
  return out;
}

double transition_probability_direct(const QubitSpec& first, const QubitSpec& second) {
  validate(first);
  validate(second);
  require_same_subspace(first.m0, first.m1, first.delta, second.m0, second.m1, second.delta);
  const double c = std::cos(first.beta) * std::cos(second.beta);
  const double s = std::sin(first.beta) * std::sin(second.beta);
  return c * c + s * s +
         0.5 * std::sin(2 * first.beta) * std::sin(2 * second.beta) *
             std::cos(first.alpha - second.alpha);
}

double transition_probability_phase_space(const QubitSpec& first, const QubitSpec& second,
                                          const PhaseSpaceOptions& options) {
  validate(first);
  validate(second);
  require_same_subspace(first.m0, first.m1, first.delta, second.m0, second.m1, second.delta);
  const int nodes =
      resolve_nodes(options.theta_nodes, std::max(std::abs(first.m0), std::abs(first.m1)));
  std::function<double(const PhasePoint&)> v1 = [&](const PhasePoint& pt) {
    return qubit_wigner(first, pt);
  };
  std::function<double(const PhasePoint&)> v2 = [&](const PhasePoint& pt) {
    return qubit_wigner(second, pt);
  };
  return phase_space_product(v1, v2, nodes, options.truncation);
}

double density_overlap(const BlochDensity& first, const BlochDensity& second) {
  validate(first);
  validate(second);
  require_same_subspace(first.m0, first.m1, first.delta, second.m0, second.m1, second.delta);
  const auto& a = first.a;
  const auto& b = second.a;
  return 0.5 * (1.0 + a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

double density_overlap_phase_space(const BlochDensity& first, const BlochDensity& second,
                                   const PhaseSpaceOptions& options) {
  validate(first);
  validate(second);
  require_same_subspace(first.m0, first.m1, first.delta, second.m0, second.m1, second.delta);
  const int nodes =
      resolve_nodes(options.theta_nodes, std::max(std::abs(first.m0), std::abs(first.m1)));
  std::function<double(const PhasePoint&)> v1 = [&](const PhasePoint& pt) {
    return density_wigner(first, pt);
  };
  std::function<double(const PhasePoint&)> v2 = [&](const PhasePoint& pt) {
    return density_wigner(second, pt);
  };
  return phase_space_product(v1, v2, nodes, options.truncation);
}

double p_integrated_wigner(const GeneralState& state, double theta,
                           const TruncationOptions& options) {
  const auto integral = integrate_truncated(
      [&](double p) { return wigner_bilinear_1d(state, PhasePoint(theta, p)); }, options,
      TailTreatment::EndpointAverage);
  require_converged(integral, options, "momentum integral of the Wigner function");
  return integral.value;
}

double p_integrated_wigner(const TwoModeState& state, double theta1, double theta2,
                           const TruncationOptions& options) {
  SincIntegralCache integrals(options);
  const PhasePoint4 point(theta1, theta2, 0.0, 0.0);
  std::complex<double> total{};
  for (const auto& row : state.coefficients()) {
    for (const auto& col : state.coefficients()) {
      const double phase =
          (col.m - row.m) * point.theta1() + (col.n - row.n) * point.theta2();
      const double first = integrals.single(state.delta1() + 0.5 * (row.m + col.m));
      const double second = integrals.single(state.delta2() + 0.5 * (row.n + col.n));
      total += std::conj(row.amplitude) * col.amplitude * std::polar(1.0, phase) *
               (first * second);
    }
  }
  return total.real() / (kTwoPi * kTwoPi);
}

double theta_integrated_wigner(const GeneralState& state, double p, int nodes) {
  const int n = resolve_nodes(nodes, state.max_abs_mode());
  return integrate_periodic(
      [&](double theta) { return wigner_bilinear_1d(state, PhasePoint(theta, p)); }, n);
}

double theta_integrated_wigner(const TwoModeState& state, double p1, double p2, int nodes) {
  const int n = resolve_nodes(nodes, state.max_abs_mode());
  return integrate_periodic(
      [&](double theta1) {
        return integrate_periodic(
            [&](double theta2) {
              return wigner_bilinear_2d(state, PhasePoint4(theta1, theta2, p1, p2));
            },
            n);
      },
      n);
}

double phase_space_norm(const GeneralState& state, const PhaseSpaceOptions& options) {
  const int nodes = resolve_nodes(options.theta_nodes, state.max_abs_mode());
  const auto integral = integrate_truncated(
      [&](double p) { return theta_integrated_wigner(state, p, nodes); }, options.truncation,
      TailTreatment::EndpointAverage);
  require_converged(integral, options.truncation, "phase-space normalization");
  return integral.value;
}

double phase_space_norm(const TwoModeState& state, const PhaseSpaceOptions& options) {
  // The theta integration leaves the Whittaker profile sum |c_mn|^2 s(p1) s(p2),
  // whose momentum integral factorizes term by term.
  SincIntegralCache first_axis(options.truncation);
  SincIntegralCache second_axis(options.truncation);
  double total = 0.0;
  for (const auto& c : state.coefficients()) {
    total += std::norm(c.amplitude) * first_axis.single(state.delta1() + c.m) *
             second_axis.single(state.delta2() + c.n);
  }
  return total;
}

}  // namespace oamwigner
