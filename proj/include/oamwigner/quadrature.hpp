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

#include <cmath>
#include <vector>

#include "oamwigner/phase_point.hpp"

namespace oamwigner {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Tabulated by GSL. Throws InvalidArgument for order < 1.
GaussLegendreRule gauss_legendre(int order);

/// Composite rule: [a, b] split into `panels` equal panels, summed in
/// ascending panel order.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels, const GaussLegendreRule& rule) {
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total += half * panel;
  }
  return total;
}

/// Trapezoid rule on the periodic window [-pi, pi); exact for trigonometric
/// polynomials of degree < nodes.
template <class F>
double integrate_periodic(F&& f, int nodes) {
  const double step = kTwoPi / nodes;
  double total = 0.0;
  for (int j = 0; j < nodes; ++j) {
    total += f(-kPi + j * step);
  }
  return total * step;
}

/// Trapezoid node count used for theta integrals of states whose modes are
/// bounded by max_abs_mode in magnitude.
inline int periodic_node_count(int max_abs_mode) { return 4 * max_abs_mode + 16; }

/// Truncation of improper p-integrals to [-radius, radius].
struct TruncationOptions {
  int radius = 1000;
  double panel_width = 0.5;
  int gauss_order = 8;
  /// Allowed disagreement between the radius and radius/2 results.
  double tolerance = 1e-3;
};

enum class TailTreatment {
  /// Plain truncation, for absolutely convergent 1/p^2 tails.
  Plain,
  /// Mean of the truncations at radius and radius + 1. Cancels the leading
  /// cos(pi R)/R tail of a single sinc, leaving O(1/R^2).
  EndpointAverage,
};

struct TruncatedIntegral {
  double value;         // at the requested radius
  double coarse_value;  // same rule at radius / 2
  double discrepancy() const { return std::abs(value - coarse_value); }
};

namespace detail {

struct RadialSums {
  double inner;        // radius / 2
  double inner_plus;   // radius / 2 + 1
  double outer;        // radius
  double outer_plus;   // radius + 1
};

struct RadialLayout {
  double width;
  int inner;
  int inner_plus;
  int outer;
  int outer_plus;
};

RadialLayout radial_layout(const TruncationOptions& options);

template <class F>
RadialSums radial_sums(F&& f, const TruncationOptions& options) {
  const RadialLayout layout = radial_layout(options);
  const GaussLegendreRule rule = gauss_legendre(options.gauss_order);
  const double half = 0.5 * layout.width;
  RadialSums sums{};
  double total = 0.0;
  for (int k = 0; k < layout.outer_plus; ++k) {
    const double mid = (k + 0.5) * layout.width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double offset = half * rule.nodes[i];
      panel += rule.weights[i] * (f(mid + offset) + f(-mid - offset));
    }
    total += half * panel;
    const int done = k + 1;
    if (done == layout.inner) sums.inner = total;
    if (done == layout.inner_plus) sums.inner_plus = total;
    if (done == layout.outer) sums.outer = total;
    if (done == layout.outer_plus) sums.outer_plus = total;
  }
  return sums;
}

}  // namespace detail

/// Integrates f over the real line by truncation. Throws InvalidArgument
/// unless radius >= 2, 1 / panel_width is an integer and radius / 2 falls on
/// a panel boundary.
template <class F>
TruncatedIntegral integrate_truncated(F&& f, const TruncationOptions& options,
                                      TailTreatment tail) {
  const auto s = detail::radial_sums(f, options);
  if (tail == TailTreatment::Plain) {
    return {s.outer, s.inner};
  }
  return {0.5 * (s.outer + s.outer_plus), 0.5 * (s.inner + s.inner_plus)};
}

/// Throws QuadratureNotConverged if the radius and radius/2 results differ by
/// more than options.tolerance.
void require_converged(const TruncatedIntegral& integral, const TruncationOptions& options,
                       const char* what);

/// Endpoint-averaged integral of sinc pi(p - center) over the real line
/// (exactly 1 in the limit).
double truncated_sinc_integral(double center, const TruncationOptions& options);

}  // namespace oamwigner
