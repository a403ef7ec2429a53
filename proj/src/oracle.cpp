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

#include "oamwigner/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_kernel.hpp"
#include "oamwigner/quadrature.hpp"

namespace oamwigner {

namespace {

using Complex = std::complex<double>;

constexpr double kIdentityTolerance = 1e-3;

struct AxisNodes {
  std::vector<double> offsets;  // vartheta in [-pi, pi]
  std::vector<double> weights;
};

AxisNodes axis_nodes(int panels, int order) {
  const GaussLegendreRule rule = gauss_legendre(order);
  const double width = kTwoPi / panels;
  AxisNodes axis;
  axis.offsets.reserve(static_cast<std::size_t>(panels) * order);
  axis.weights.reserve(axis.offsets.capacity());
  for (int k = 0; k < panels; ++k) {
    const double mid = -kPi + (k + 0.5) * width;
    for (int i = 0; i < order; ++i) {
      axis.offsets.push_back(mid + 0.5 * width * rule.nodes[i]);
      axis.weights.push_back(0.5 * width * rule.weights[i]);
    }
  }
  return axis;
}

int panel_order(const OracleOptions& options, int max_abs_mode) {
  if (options.panels < 1 || options.nodes < options.panels ||
      options.nodes % options.panels != 0) {
    throw InvalidArgument("oracle nodes must be a positive multiple of the panel count");
  }
  const int minimum = minimum_oracle_nodes(max_abs_mode);
  if (options.nodes < minimum) {
    throw InvalidArgument("oracle needs at least " + std::to_string(minimum) +
                          " nodes for these modes, got " + std::to_string(options.nodes));
  }
  return options.nodes / options.panels;
}

OracleResult finish(Complex coarse, Complex fine, int nodes, const OracleOptions& options) {
  OracleResult result{fine.real(), std::abs(fine - coarse), fine.imag(), nodes};
  if (options.require_convergence && !(result.error_estimate <= options.convergence_tolerance)) {
    throw QuadratureNotConverged("oracle changed by " + std::to_string(result.error_estimate) +
                                 " when doubling " + std::to_string(nodes) + " nodes");
  }
  return result;
}

Complex integrate_1d(const GeneralState& state, const PhasePoint& point, const AxisNodes& axis) {
  Complex sum{};
  for (std::size_t j = 0; j < axis.offsets.size(); ++j) {
    const double v = axis.offsets[j];
    const Complex minus = state.wave_function(point.theta() - 0.5 * v);
    const Complex plus = state.wave_function(point.theta() + 0.5 * v);
    sum += axis.weights[j] * std::polar(1.0, -point.p() * v) * std::conj(minus) * plus;
  }
  return sum / (kTwoPi * kTwoPi);
}

// e^{i(mode + delta)(theta +- v/2)} for every node and every distinct mode.
struct ShiftedExponentials {
  std::vector<std::vector<Complex>> plus;
  std::vector<std::vector<Complex>> minus;
};

ShiftedExponentials shifted_exponentials(const std::vector<int>& modes, double delta,
                                         double theta, const AxisNodes& axis) {
  ShiftedExponentials e;
  e.plus.assign(axis.offsets.size(), std::vector<Complex>(modes.size()));
  e.minus.assign(axis.offsets.size(), std::vector<Complex>(modes.size()));
  for (std::size_t j = 0; j < axis.offsets.size(); ++j) {
    for (std::size_t q = 0; q < modes.size(); ++q) {
      const double k = modes[q] + delta;
      e.plus[j][q] = std::polar(1.0, k * (theta + 0.5 * axis.offsets[j]));
      e.minus[j][q] = std::polar(1.0, k * (theta - 0.5 * axis.offsets[j]));
    }
  }
  return e;
}

Complex integrate_2d(const TwoModeState& state, const PhasePoint4& point, const AxisNodes& axis) {
  std::vector<int> first_modes;
  std::vector<int> second_modes;
  for (const auto& c : state.coefficients()) {
    first_modes.push_back(c.m);
    second_modes.push_back(c.n);
  }
  std::sort(first_modes.begin(), first_modes.end());
  first_modes.erase(std::unique(first_modes.begin(), first_modes.end()), first_modes.end());
  std::sort(second_modes.begin(), second_modes.end());
  second_modes.erase(std::unique(second_modes.begin(), second_modes.end()), second_modes.end());
  auto index_of = [](const std::vector<int>& v, int x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  struct Term {
    std::size_t first;
    std::size_t second;
    Complex amplitude;
  };
  std::vector<Term> terms;
  for (const auto& c : state.coefficients()) {
    terms.push_back({index_of(first_modes, c.m), index_of(second_modes, c.n), c.amplitude});
  }

  const auto e1 = shifted_exponentials(first_modes, state.delta1(), point.theta1(), axis);
  const auto e2 = shifted_exponentials(second_modes, state.delta2(), point.theta2(), axis);
  const std::size_t count = axis.offsets.size();
  std::vector<Complex> phase1(count);
  std::vector<Complex> phase2(count);
  for (std::size_t j = 0; j < count; ++j) {
    phase1[j] = axis.weights[j] * std::polar(1.0, -point.p1() * axis.offsets[j]);
    phase2[j] = axis.weights[j] * std::polar(1.0, -point.p2() * axis.offsets[j]);
  }

  // psi(theta +- v/2) = sum_n [sum_m c_mn e1(m)] e2(n); the bracket only
  // depends on the first-axis node.
  std::vector<Complex> partial_plus(second_modes.size());
  std::vector<Complex> partial_minus(second_modes.size());
  Complex sum{};
  for (std::size_t j = 0; j < count; ++j) {
    std::fill(partial_plus.begin(), partial_plus.end(), Complex{});
    std::fill(partial_minus.begin(), partial_minus.end(), Complex{});
    for (const auto& t : terms) {
      partial_plus[t.second] += t.amplitude * e1.plus[j][t.first];
      partial_minus[t.second] += t.amplitude * e1.minus[j][t.first];
    }
    Complex row{};
    for (std::size_t k = 0; k < count; ++k) {
      Complex plus{};
      Complex minus{};
      for (std::size_t q = 0; q < second_modes.size(); ++q) {
        plus += partial_plus[q] * e2.plus[k][q];
        minus += partial_minus[q] * e2.minus[k][q];
      }
      row += phase2[k] * std::conj(minus) * plus;
    }
    sum += phase1[j] * row;
  }
  const double norm = kTwoPi * kTwoPi;
  return sum / (norm * norm);
}

}  // namespace

int minimum_oracle_nodes(int max_abs_mode) { return 4 * std::abs(max_abs_mode) + 16; }

OracleResult oracle_wigner_1d(const GeneralState& state, const PhasePoint& point,
                              const OracleOptions& options) {
  const int order = panel_order(options, state.max_abs_mode() + 1);
  const Complex coarse = integrate_1d(state, point, axis_nodes(options.panels, order));
  const Complex fine = integrate_1d(state, point, axis_nodes(options.panels, 2 * order));
  return finish(coarse, fine, options.nodes, options);
}

OracleResult oracle_wigner_2d(const TwoModeState& state, const PhasePoint4& point,
                              const OracleOptions& options) {
  const int order = panel_order(options, state.max_abs_mode() + 1);
  const Complex coarse = integrate_2d(state, point, axis_nodes(options.panels, order));
  const Complex fine = integrate_2d(state, point, axis_nodes(options.panels, 2 * order));
  return finish(coarse, fine, options.nodes, options);
}

OracleResult oracle_wigner_density(const BlochDensity& rho, const PhasePoint& point,
                                   const OracleOptions& options) {
  OracleResult total{0.0, 0.0, 0.0, options.nodes};
  for (const auto& [weight, state] : pure_components(rho)) {
    const OracleResult part = oracle_wigner_1d(state, point, options);
    total.value += weight * part.value;
    total.error_estimate += weight * part.error_estimate;
    total.imaginary_part += weight * part.imaginary_part;
  }
  return total;
}

double IdentityCheck::deviation() const { return std::abs(computed - expected); }

bool IdentityCheck::passed() const { return deviation() <= tolerance; }

double SincIdentityReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& c : checks) {
    worst = std::max(worst, c.deviation());
  }
  return worst;
}

double SincIdentityReport::max_deviation(const std::string& category) const {
  double worst = 0.0;
  for (const auto& c : checks) {
    if (c.category == category) {
      worst = std::max(worst, c.deviation());
    }
  }
  return worst;
}

bool SincIdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed(); });
}

SincIdentityReport verify_sinc_identities(int radius) {
  if (radius < 100) {
    throw InvalidArgument("sinc identity checks need a truncation radius >= 100");
  }
  TruncationOptions options;
  options.radius = radius;
  SincIdentityReport report{radius, {}};

  for (double a : {0.0, 0.37, 0.5, -1.25, 2.9}) {
    const auto integral = integrate_truncated([a](double p) { return sinc_pi(p + a); }, options,
                                              TailTreatment::EndpointAverage);
    report.checks.push_back({"single_sinc", "int sinc pi(p + " + std::to_string(a) + ")", 1.0,
                             integral.value, kIdentityTolerance});
  }
  for (double a : {0.0, 0.37, -1.25}) {
    const auto integral = integrate_truncated(
        [a](double p) {
          const double s = sinc_pi(p + a);
          return s * s;
        },
        options, TailTreatment::Plain);
    report.checks.push_back({"sinc_squared", "int sinc^2 pi(p + " + std::to_string(a) + ")", 1.0,
                             integral.value, kIdentityTolerance});
  }
  for (int m = -2; m <= 3; ++m) {
    for (int n = m; n <= 3; ++n) {
      const auto integral = integrate_truncated(
          [m, n](double p) { return sinc_pi(p - m) * sinc_pi(p - n); }, options,
          TailTreatment::Plain);
      report.checks.push_back({"orthonormality",
                               "int sinc pi(p - " + std::to_string(m) + ") sinc pi(p - " +
                                   std::to_string(n) + ")",
                               m == n ? 1.0 : 0.0, integral.value, kIdentityTolerance});
    }
  }
  return report;
}

}  // namespace oamwigner
