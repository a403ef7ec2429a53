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

#include "oamwigner/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>
#include <string>

#include "oamwigner/errors.hpp"
#include "oamwigner/phase_kernel.hpp"

namespace oamwigner {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) {
    throw InvalidArgument("Gauss-Legendre order must be positive");
  }
  const std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(order)),
            &gsl_integration_glfixed_table_free);
  if (!table) {
    throw NumericalError("could not build a Gauss-Legendre rule of order " +
                         std::to_string(order));
  }
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return rule;
}

namespace detail {

RadialLayout radial_layout(const TruncationOptions& options) {
  if (options.radius < 2) {
    throw InvalidArgument("truncation radius must be at least 2");
  }
  if (options.gauss_order < 1) {
    throw InvalidArgument("Gauss order must be positive");
  }
  const double per_unit = 1.0 / options.panel_width;
  const double rounded = std::nearbyint(per_unit);
  if (!(options.panel_width > 0.0) || std::abs(per_unit - rounded) > 1e-9) {
    throw InvalidArgument("panel width must be 1/k for a positive integer k");
  }
  const int k = static_cast<int>(rounded);
  const double inner = 0.5 * options.radius * k;
  if (std::abs(inner - std::nearbyint(inner)) > 1e-9) {
    throw InvalidArgument("radius/2 must fall on a panel boundary");
  }
  const int inner_panels = static_cast<int>(std::nearbyint(inner));
  const int outer_panels = options.radius * k;
  return {1.0 / k, inner_panels, inner_panels + k, outer_panels, outer_panels + k};
}

}  // namespace detail

void require_converged(const TruncatedIntegral& integral, const TruncationOptions& options,
                       const char* what) {
  if (!(integral.discrepancy() <= options.tolerance)) {
    throw QuadratureNotConverged(std::string(what) + ": radius " +
                                 std::to_string(options.radius) + " and " +
                                 std::to_string(options.radius / 2) + " differ by " +
                                 std::to_string(integral.discrepancy()));
  }
}

double truncated_sinc_integral(double center, const TruncationOptions& options) {
  const auto integral = integrate_truncated(
      [center](double p) { return sinc_pi(p - center); }, options,
      TailTreatment::EndpointAverage);
  require_converged(integral, options, "single sinc integral");
  return integral.value;
}

}  // namespace oamwigner
