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

#include "oamwigner/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

#include "oamwigner/errors.hpp"
#include "oamwigner/io.hpp"
#include "oamwigner/phase_kernel.hpp"
#include "oamwigner/sampling.hpp"

namespace oamwigner {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> fields(const std::string& text, std::size_t min, std::size_t max,
                                const std::string& what) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    out.push_back(part);
  }
  if (out.size() < min || out.size() > max) {
    throw InvalidArgument(what + " expects " + std::to_string(min) +
                          (min == max ? "" : " to " + std::to_string(max)) + " fields, got '" +
                          text + "'");
  }
  return out;
}

int parse_mode(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InvalidArgument("cannot parse mode index '" + text + "'");
  }
  return value;
}

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

std::string number(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

std::optional<GeneralState> pure_1d(const StateInput& state) {
  if (const auto* q = std::get_if<QubitSpec>(&state)) {
    return qubit_to_state(*q);
  }
  if (const auto* s = std::get_if<GeneralState>(&state)) {
    return *s;
  }
  return std::nullopt;
}

std::optional<TwoModeState> pure_2d(const StateInput& state) {
  if (const auto* q = std::get_if<TwoQubitSpec>(&state)) {
    return two_qubit_to_state(*q);
  }
  if (const auto* b = std::get_if<BellSpec>(&state)) {
    return bell_state(b->kind, b->m0);
  }
  if (const auto* s = std::get_if<TwoModeState>(&state)) {
    return *s;
  }
  return std::nullopt;
}

using Evaluator = std::function<double(std::span<const double>)>;

PhasePoint point_1d(std::span<const double> x) { return PhasePoint(x[0], x[1]); }
PhasePoint4 point_2d(std::span<const double> x) { return PhasePoint4(x[0], x[1], x[2], x[3]); }

Evaluator closed_evaluator(const StateInput& state) {
  return std::visit(
      Overloaded{
          [](const QubitSpec& q) -> Evaluator {
            validate(q);
            return [q](std::span<const double> x) { return qubit_wigner(q, point_1d(x)); };
          },
          [](const TwoQubitSpec& q) -> Evaluator {
            validate(q);
            return [q](std::span<const double> x) { return two_qubit_wigner(q, point_2d(x)); };
          },
          [](const BellSpec& b) -> Evaluator {
            bell_state(b.kind, b.m0);
            return [b](std::span<const double> x) {
              return bell_wigner(b.kind, b.m0, point_2d(x));
            };
          },
          [](const BlochDensity& rho) -> Evaluator {
            validate(rho);
            return [rho](std::span<const double> x) { return density_wigner(rho, point_1d(x)); };
          },
          [](const auto&) -> Evaluator {
            throw InvalidArgument(
                "the closed path needs a qubit, two-qubit, Bell or density state");
          },
      },
      state);
}

Evaluator bilinear_evaluator(const StateInput& state) {
  if (const auto* rho = std::get_if<BlochDensity>(&state)) {
    validate(*rho);
    return [rho = *rho](std::span<const double> x) {
      return wigner_bilinear_density(rho, point_1d(x));
    };
  }
  if (auto s = pure_1d(state)) {
    return [s = *s](std::span<const double> x) { return wigner_bilinear_1d(s, point_1d(x)); };
  }
  return [s = *pure_2d(state)](std::span<const double> x) {
    return wigner_bilinear_2d(s, point_2d(x));
  };
}

Evaluator oracle_evaluator(const StateInput& state, const OracleOptions& options) {
  if (const auto* rho = std::get_if<BlochDensity>(&state)) {
    validate(*rho);
    return [rho = *rho, options](std::span<const double> x) {
      return oracle_wigner_density(rho, point_1d(x), options).value;
    };
  }
  if (auto s = pure_1d(state)) {
    return [s = *s, options](std::span<const double> x) {
      return oracle_wigner_1d(s, point_1d(x), options).value;
    };
  }
  return [s = *pure_2d(state), options](std::span<const double> x) {
    return oracle_wigner_2d(s, point_2d(x), options).value;
  };
}

Evaluator make_evaluator(const StateInput& state, EvalPath path, const OracleOptions& oracle) {
  switch (path) {
    case EvalPath::Closed:
      return closed_evaluator(state);
    case EvalPath::Bilinear:
      return bilinear_evaluator(state);
    case EvalPath::Oracle:
      return oracle_evaluator(state, oracle);
  }
  throw InvalidArgument("unknown evaluation path");
}

void require_axes(const PhaseGrid& grid, const std::vector<std::string>& names) {
  const auto& axes = grid.axes();
  bool ok = axes.size() == names.size();
  for (std::size_t i = 0; ok && i < axes.size(); ++i) {
    ok = axes[i].name == names[i];
  }
  if (!ok) {
    std::string expected;
    for (const auto& n : names) {
      expected += (expected.empty() ? "" : ",") + n;
    }
    throw InvalidGrid("grid axes must be " + expected);
  }
}

// Pure states and mixtures share one code path through the spectral weights.
std::vector<std::pair<double, GeneralState>> weighted_1d(const StateInput& state) {
  if (const auto* rho = std::get_if<BlochDensity>(&state)) {
    validate(*rho);
    return pure_components(*rho);
  }
  return {{1.0, *pure_1d(state)}};
}

std::vector<int> support_1d(const StateInput& state) {
  if (const auto* rho = std::get_if<BlochDensity>(&state)) {
    return {rho->m0, rho->m1};
  }
  const GeneralState pure = *pure_1d(state);
  std::vector<int> modes;
  for (const auto& c : pure.coefficients()) {
    modes.push_back(c.mode);
  }
  return modes;
}

double density_delta(const StateInput& state) {
  if (const auto* rho = std::get_if<BlochDensity>(&state)) {
    return rho->delta;
  }
  return pure_1d(state)->delta();
}

struct Tally {
  std::string name;
  double tolerance;
  double worst = 0.0;

  void add(double deviation) {
    worst = std::isnan(deviation) ? deviation : std::max(worst, deviation);
  }
  bool passed() const { return worst <= tolerance; }
  nlohmann::json json() const {
    return {{"name", name}, {"deviation", worst}, {"tolerance", tolerance}, {"passed", passed()}};
  }
};

}  // namespace

QubitSpec parse_qubit(const std::string& text) {
  const auto f = fields(text, 4, 5, "--qubit");
  QubitSpec spec;
  spec.m0 = parse_mode(f[0]);
  spec.m1 = parse_mode(f[1]);
  spec.alpha = parse_real(f[2]);
  spec.beta = parse_real(f[3]);
  spec.delta = f.size() > 4 ? parse_real(f[4]) : 0.0;
  validate(spec);
  return spec;
}

BellSpec parse_bell(const std::string& text) {
  const auto f = fields(text, 2, 2, "--bell");
  BellSpec spec{parse_bell_kind(f[0]), parse_mode(f[1])};
  if (spec.m0 == 0) {
    throw ZeroMode("Bell states need m0 != 0");
  }
  return spec;
}

TwoQubitSpec parse_two_qubit(const std::string& text) {
  const auto f = fields(text, 10, 12, "--two-qubit");
  if (f.size() == 11) {
    throw InvalidArgument("--two-qubit takes both delta1 and delta2 or neither");
  }
  TwoQubitSpec spec;
  spec.m0 = parse_mode(f[0]);
  spec.m1 = parse_mode(f[1]);
  spec.n0 = parse_mode(f[2]);
  spec.n1 = parse_mode(f[3]);
  spec.b = amplitudes_from_angles(parse_real(f[4]), parse_real(f[5]), parse_real(f[6]));
  spec.alpha10 = parse_real(f[7]);
  spec.alpha01 = parse_real(f[8]);
  spec.alpha11 = parse_real(f[9]);
  if (f.size() == 12) {
    spec.delta1 = parse_real(f[10]);
    spec.delta2 = parse_real(f[11]);
  }
  validate(spec);
  return spec;
}

BlochDensity parse_density(const std::string& text) {
  const auto f = fields(text, 5, 6, "--density");
  BlochDensity rho;
  rho.m0 = parse_mode(f[0]);
  rho.m1 = parse_mode(f[1]);
  rho.a = {parse_real(f[2]), parse_real(f[3]), parse_real(f[4])};
  rho.delta = f.size() > 5 ? parse_real(f[5]) : 0.0;
  validate(rho);
  return rho;
}

int dimension(const StateInput& state) {
  return std::visit(Overloaded{
                        [](const QubitSpec&) { return 1; },
                        [](const BlochDensity&) { return 1; },
                        [](const GeneralState&) { return 1; },
                        [](const auto&) { return 2; },
                    },
                    state);
}

std::string describe(const StateInput& state) {
  return std::visit(
      Overloaded{
          [](const QubitSpec& q) {
            return "qubit m0=" + std::to_string(q.m0) + " m1=" + std::to_string(q.m1) +
                   " alpha=" + number(q.alpha) + " beta=" + number(q.beta) +
                   " delta=" + number(q.delta);
          },
          [](const TwoQubitSpec& q) {
            return "two-qubit m=(" + std::to_string(q.m0) + "," + std::to_string(q.m1) +
                   ") n=(" + std::to_string(q.n0) + "," + std::to_string(q.n1) + ") b=(" +
                   number(q.b.b00) + "," + number(q.b.b10) + "," + number(q.b.b01) + "," +
                   number(q.b.b11) + ") alpha=(" + number(q.alpha10) + "," + number(q.alpha01) +
                   "," + number(q.alpha11) + ") delta=(" + number(q.delta1) + "," +
                   number(q.delta2) + ")";
          },
          [](const BellSpec& b) { return "bell " + to_string(b.kind) + " m0=" + std::to_string(b.m0); },
          [](const BlochDensity& rho) {
            return "density m0=" + std::to_string(rho.m0) + " m1=" + std::to_string(rho.m1) +
                   " a=(" + number(rho.a[0]) + "," + number(rho.a[1]) + "," + number(rho.a[2]) +
                   ") delta=" + number(rho.delta);
          },
          [](const GeneralState& s) { return "state " + to_json(s).dump(); },
          [](const TwoModeState& s) { return "state " + to_json(s).dump(); },
      },
      state);
}

EvalPath parse_eval_path(const std::string& text) {
  const auto t = lower(text);
  if (t == "closed") return EvalPath::Closed;
  if (t == "bilinear") return EvalPath::Bilinear;
  if (t == "oracle") return EvalPath::Oracle;
  throw InvalidArgument("unknown path '" + text + "' (closed, bilinear, oracle)");
}

Scale parse_scale(const std::string& text) {
  const auto t = lower(text);
  if (t == "raw") return Scale::Raw;
  if (t == "two-pi-d") return Scale::TwoPiD;
  throw InvalidArgument("unknown scale '" + text + "' (raw, two-pi-d)");
}

std::string to_string(EvalPath path) {
  switch (path) {
    case EvalPath::Closed:
      return "closed";
    case EvalPath::Bilinear:
      return "bilinear";
    case EvalPath::Oracle:
      return "oracle";
  }
  return "?";
}

std::string to_string(Scale scale) { return scale == Scale::Raw ? "raw" : "two-pi-d"; }

double evaluate_wigner(const StateInput& state, std::span<const double> coordinates,
                       EvalPath path, const OracleOptions& oracle) {
  if (coordinates.size() != 2 * static_cast<std::size_t>(dimension(state))) {
    throw InvalidArgument("wrong number of phase-space coordinates");
  }
  return make_evaluator(state, path, oracle)(coordinates);
}

GridResult cmd_eval(const StateInput& state, const PhaseGrid& grid, EvalPath path, Scale scale,
                    const OracleOptions& oracle) {
  const int d = dimension(state);
  require_axes(grid, phase_axes(d));
  const auto f = make_evaluator(state, path, oracle);
  const double factor = scale == Scale::Raw ? 1.0 : std::pow(kTwoPi, d);
  GridResult result{grid.axes(), grid.evaluate(f), {"wigner", describe(state), to_string(path),
                                                   to_string(scale)}};
  if (factor != 1.0) {
    for (auto& v : result.values) {
      v *= factor;
    }
  }
  return result;
}

MarginalAxis parse_marginal_axis(const std::string& text) {
  const auto t = lower(text);
  if (t == "angle") return MarginalAxis::Angle;
  if (t == "momentum") return MarginalAxis::Momentum;
  throw InvalidArgument("unknown marginal axis '" + text + "' (angle, momentum)");
}

GridResult cmd_marginal(const StateInput& state, MarginalAxis axis, const PhaseGrid& grid) {
  const int d = dimension(state);
  const bool angle = axis == MarginalAxis::Angle;
  require_axes(grid, angle ? angle_axes(d) : momentum_axes(d));
  GridResult result{grid.axes(), {},
                    {angle ? "marginal-angle" : "marginal-momentum", describe(state), "closed",
                     "raw"}};
  if (d == 1) {
    const auto parts = weighted_1d(state);
    result.values = grid.evaluate([&](std::span<const double> x) {
      double total = 0.0;
      for (const auto& [weight, s] : parts) {
        total += weight * (angle ? marginal_angle(s, x[0]) : marginal_momentum(s, x[0]));
      }
      return total;
    });
  } else {
    const TwoModeState s = *pure_2d(state);
    result.values = grid.evaluate([&](std::span<const double> x) {
      return angle ? marginal_angle(s, x[0], x[1]) : marginal_momentum(s, x[0], x[1]);
    });
  }
  return result;
}

ProbsMethod parse_probs_method(const std::string& text) {
  const auto t = lower(text);
  if (t == "analytic") return ProbsMethod::Analytic;
  if (t == "quadrature") return ProbsMethod::Quadrature;
  throw InvalidArgument("unknown method '" + text + "' (analytic, quadrature)");
}

nlohmann::json cmd_probs(const StateInput& state, ProbsMethod method,
                         const TruncationOptions& truncation) {
  nlohmann::json out = nlohmann::json::object();
  if (dimension(state) == 2) {
    const TwoModeState s = *pure_2d(state);
    std::vector<ModePair> modes;
    for (const auto& c : s.coefficients()) {
      modes.emplace_back(c.m, c.n);
    }
    const auto probs = method == ProbsMethod::Analytic
                           ? extract_oam_probabilities(s, modes)
                           : extract_oam_probabilities(WhittakerProfile2D::from_state(s), modes,
                                                       truncation);
    for (const auto& [mn, prob] : probs) {
      out[std::to_string(mn.first) + "," + std::to_string(mn.second)] = prob;
    }
    return out;
  }

  const auto parts = weighted_1d(state);
  const auto modes = support_1d(state);
  std::map<int, double> probs;
  if (method == ProbsMethod::Analytic) {
    for (const auto& [weight, s] : parts) {
      for (const auto& [m, prob] : extract_oam_probabilities(s, modes)) {
        probs[m] += weight * prob;
      }
    }
  } else {
    // The momentum profile is rebuilt from the Wigner function itself.
    const auto profile = [&parts](double p) {
      double total = 0.0;
      for (const auto& [weight, s] : parts) {
        total += weight * theta_integrated_wigner(s, p);
      }
      return total;
    };
    probs = extract_oam_probabilities(profile, density_delta(state), modes, truncation);
  }
  for (const auto& [m, prob] : probs) {
    out[std::to_string(m)] = prob;
  }
  return out;
}

OverlapMethod parse_overlap_method(const std::string& text) {
  const auto t = lower(text);
  if (t == "direct") return OverlapMethod::Direct;
  if (t == "phase-space") return OverlapMethod::PhaseSpace;
  throw InvalidArgument("unknown method '" + text + "' (direct, phase-space)");
}

double cmd_overlap(const StateInput& first, const StateInput& second, OverlapMethod method,
                   const PhaseSpaceOptions& options) {
  const auto* q1 = std::get_if<QubitSpec>(&first);
  const auto* q2 = std::get_if<QubitSpec>(&second);
  if (q1 && q2) {
    return method == OverlapMethod::Direct ? transition_probability_direct(*q1, *q2)
                                           : transition_probability_phase_space(*q1, *q2, options);
  }
  auto as_density = [](const StateInput& s) -> BlochDensity {
    if (const auto* q = std::get_if<QubitSpec>(&s)) {
      return density_from_qubit(*q);
    }
    if (const auto* rho = std::get_if<BlochDensity>(&s)) {
      return *rho;
    }
    throw InvalidArgument("overlap takes qubit or density states");
  };
  const BlochDensity r1 = as_density(first);
  const BlochDensity r2 = as_density(second);
  return method == OverlapMethod::Direct ? density_overlap(r1, r2)
                                         : density_overlap_phase_space(r1, r2, options);
}

VerifyReport cmd_verify(int radius, std::uint64_t seed) {
  const SincIdentityReport sinc = verify_sinc_identities(radius);
  Sampler sampler(seed);

  Tally qubit_bilinear{"qubit closed vs bilinear", 1e-12};
  Tally qubit_oracle{"qubit closed vs oracle", 1e-9};
  for (int i = 0; i < 10; ++i) {
    const QubitSpec q = sampler.qubit();
    const GeneralState s = qubit_to_state(q);
    for (int k = 0; k < 3; ++k) {
      const PhasePoint pt = sampler.point(s.max_abs_mode());
      const double closed = qubit_wigner(q, pt);
      qubit_bilinear.add(std::abs(closed - wigner_bilinear_1d(s, pt)));
      qubit_oracle.add(std::abs(closed - oracle_wigner_1d(s, pt).value));
    }
  }

  Tally two_bilinear{"two-qubit closed vs bilinear", 1e-12};
  Tally two_oracle{"two-qubit closed vs oracle", 1e-9};
  for (int i = 0; i < 5; ++i) {
    const TwoQubitSpec q = sampler.two_qubit();
    const TwoModeState s = two_qubit_to_state(q);
    for (int k = 0; k < 2; ++k) {
      const PhasePoint4 pt = sampler.point4(s.max_abs_mode());
      const double closed = two_qubit_wigner(q, pt);
      two_bilinear.add(std::abs(closed - wigner_bilinear_2d(s, pt)));
      two_oracle.add(std::abs(closed - oracle_wigner_2d(s, pt).value));
    }
  }

  Tally qudit_oracle{"qudit bilinear vs oracle", 1e-9};
  for (int i = 0; i < 5; ++i) {
    const GeneralState s = sampler.qudit();
    for (int k = 0; k < 3; ++k) {
      const PhasePoint pt = sampler.point(s.max_abs_mode());
      qudit_oracle.add(std::abs(wigner_bilinear_1d(s, pt) - oracle_wigner_1d(s, pt).value));
    }
  }

  Tally density_oracle{"density closed vs oracle", 1e-9};
  for (int i = 0; i < 5; ++i) {
    const BlochDensity rho = sampler.bloch();
    const PhasePoint pt = sampler.point(std::max(std::abs(rho.m0), std::abs(rho.m1)));
    density_oracle.add(std::abs(density_wigner(rho, pt) - oracle_wigner_density(rho, pt).value));
  }

  // Psi- on modes {1, -1} at coinciding angles and zero momentum.
  Tally bell_value{"Bell minimum -1/(4 pi^2)", 1e-9};
  const double expected = -1.0 / (4.0 * kPi * kPi);
  const PhasePoint4 diagonal(0.3, 0.3, 0.0, 0.0);
  bell_value.add(std::abs(bell_wigner(BellKind::PsiMinus, 1, diagonal) - expected));
  bell_value.add(std::abs(oracle_wigner_2d(bell_state(BellKind::PsiMinus, 1), diagonal).value -
                          expected));

  Tally bell_zeros{"Bell zeros at nonzero integer momenta", 1e-12};
  for (const BellKind kind :
       {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    for (const auto& [p1, p2] : {std::pair{1.0, 2.0}, {-1.0, 3.0}, {2.0, -2.0}}) {
      bell_zeros.add(std::abs(bell_wigner(kind, 1, PhasePoint4(0.7, -1.1, p1, p2))));
    }
  }

  PhaseSpaceOptions options;
  options.truncation.radius = radius;
  Tally overlap{"phase-space overlap vs direct", 1e-3};
  Tally norm{"phase-space normalization", 1e-3};
  for (int i = 0; i < 2; ++i) {
    const QubitSpec a = sampler.qubit(3);
    QubitSpec b = a;
    b.alpha = sampler.uniform(0.0, kTwoPi);
    b.beta = sampler.uniform(0.0, kPi / 2);
    overlap.add(std::abs(transition_probability_phase_space(a, b, options) -
                         transition_probability_direct(a, b)));
    norm.add(std::abs(phase_space_norm(qubit_to_state(a), options) - 1.0));
  }

  nlohmann::json checks = nlohmann::json::array();
  bool passed = sinc.passed();
  for (const Tally* t : {&qubit_bilinear, &qubit_oracle, &two_bilinear, &two_oracle,
                         &qudit_oracle, &density_oracle, &bell_value, &bell_zeros, &overlap,
                         &norm}) {
    checks.push_back(t->json());
    passed = passed && t->passed();
  }
  VerifyReport report;
  report.passed = passed;
  report.json = {{"radius", radius},
                 {"seed", seed},
                 {"sinc_identities", to_json(sinc)},
                 {"checks", checks},
                 {"passed", passed}};
  return report;
}

NegativityReport cmd_negativity(const StateInput& state, const PhaseGrid& grid, EvalPath path) {
  const GridResult values = cmd_eval(state, grid, path, Scale::Raw);
  NegativityReport report;
  report.samples = values.values.size();
  std::size_t best = 0;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < values.values.size(); ++i) {
    if (values.values[i] < values.values[best]) {
      best = i;
    }
    if (values.values[i] < 0.0) {
      ++negative;
    }
  }
  report.min_value = values.values[best];
  report.negative_fraction = static_cast<double>(negative) / static_cast<double>(report.samples);
  // Unravel the row-major index of the minimum.
  std::size_t rest = best;
  std::vector<std::pair<std::string, double>> coords(grid.axes().size());
  for (std::size_t k = grid.axes().size(); k-- > 0;) {
    const auto& axis = grid.axes()[k];
    const auto n = static_cast<std::size_t>(axis.nodes);
    coords[k] = {axis.name, axis.samples()[rest % n]};
    rest /= n;
  }
  report.argmin = std::move(coords);
  return report;
}

nlohmann::json to_json(const NegativityReport& report) {
  nlohmann::json argmin = nlohmann::json::object();
  for (const auto& [name, value] : report.argmin) {
    argmin[name] = value;
  }
  return {{"min", report.min_value},
          {"argmin", argmin},
          {"negative_fraction", report.negative_fraction},
          {"samples", report.samples}};
}

double spiral_period(const TorusSpiralSpec& spec) {
  interference_argument(spec, 0.0, 0.0);
  const long gap = std::lcm(static_cast<long>(std::abs(spec.m1 - spec.m0)),
                            static_cast<long>(std::abs(spec.n1 - spec.n0)));
  return 2.0 * kTwoPi * static_cast<double>(gap);
}

std::vector<SpiralSample> cmd_spiral(const TorusSpiralSpec& spec, int samples,
                                     double vartheta_minus) {
  if (samples < 1) {
    throw InvalidArgument("spiral needs at least one sample");
  }
  const double period = spiral_period(spec);
  std::vector<SpiralSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double plus = period * k / samples;
    const TorusAngles angles = invert_interference(plus, vartheta_minus, spec);
    out.push_back({plus, reduce_angle(angles.theta1), reduce_angle(angles.theta2)});
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<SpiralSample>& spiral) {
  out << "# oamwigner spiral\n# vartheta_plus,theta1,theta2\n";
  for (const auto& s : spiral) {
    out << number(s.vartheta_plus) << "," << number(s.theta1) << "," << number(s.theta2) << "\n";
  }
}

nlohmann::json to_json(const std::vector<SpiralSample>& spiral) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : spiral) {
    rows.push_back({s.vartheta_plus, s.theta1, s.theta2});
  }
  return {{"columns", {"vartheta_plus", "theta1", "theta2"}}, {"samples", rows}};
}

}  // namespace oamwigner
