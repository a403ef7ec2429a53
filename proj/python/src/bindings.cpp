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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oamwigner/closed_forms.hpp"
#include "oamwigner/commands.hpp"
#include "oamwigner/errors.hpp"
#include "oamwigner/io.hpp"
#include "oamwigner/marginals.hpp"
#include "oamwigner/oracle.hpp"
#include "oamwigner/phase_kernel.hpp"

namespace py = pybind11;
using namespace oamwigner;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

StateInput state_input(const std::string& kind, const std::string& text) {
  if (kind == "qubit") return parse_qubit(text);
  if (kind == "bell") return parse_bell(text);
  if (kind == "two-qubit") return parse_two_qubit(text);
  if (kind == "density") return parse_density(text);
  if (kind == "json") {
    return std::visit([](auto&& s) -> StateInput { return s; },
                      state_from_json(nlohmann::json::parse(text)));
  }
  throw InvalidArgument("unknown state kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wigner functions for OAM states on the circle and the torus";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  m.def("sinc_pi", &sinc_pi, py::arg("x"));
  m.def(
      "kernel_element",
      [](int mi, int n, double delta, double theta, double p) {
        return kernel_element(mi, n, delta, PhasePoint(theta, p)).value;
      },
      py::arg("m"), py::arg("n"), py::arg("delta"), py::arg("theta"), py::arg("p"));

  py::class_<QubitSpec>(m, "QubitSpec")
      .def(py::init([](int m0, int m1, double alpha, double beta, double delta) {
             QubitSpec q{m0, m1, alpha, beta, delta};
             validate(q);
             return q;
           }),
           py::arg("m0"), py::arg("m1"), py::arg("alpha"), py::arg("beta"),
           py::arg("delta") = 0.0)
      .def_readonly("m0", &QubitSpec::m0)
      .def_readonly("m1", &QubitSpec::m1)
      .def_readonly("alpha", &QubitSpec::alpha)
      .def_readonly("beta", &QubitSpec::beta)
      .def_readonly("delta", &QubitSpec::delta);

  py::class_<BlochDensity>(m, "BlochDensity")
      .def(py::init([](int m0, int m1, std::array<double, 3> a, double delta) {
             BlochDensity rho{m0, m1, a, delta};
             validate(rho);
             return rho;
           }),
           py::arg("m0"), py::arg("m1"), py::arg("a"), py::arg("delta") = 0.0)
      .def_readonly("a", &BlochDensity::a);

  py::class_<GeneralState>(m, "State")
      .def(py::init([](const std::vector<std::pair<int, std::complex<double>>>& coefficients,
                       double delta, bool normalize) {
             std::vector<ModeAmplitude> c;
             for (const auto& [mode, amplitude] : coefficients) c.push_back({mode, amplitude});
             return normalize ? GeneralState::normalized(std::move(c), delta)
                              : GeneralState(std::move(c), delta);
           }),
           py::arg("coefficients"), py::arg("delta") = 0.0, py::arg("normalize") = false)
      .def_property_readonly("delta", &GeneralState::delta)
      .def("amplitude", &GeneralState::amplitude, py::arg("mode"))
      .def_property_readonly("coefficients", [](const GeneralState& s) {
        std::vector<std::pair<int, std::complex<double>>> out;
        for (const auto& c : s.coefficients()) out.emplace_back(c.mode, c.amplitude);
        return out;
      });

  py::class_<TwoModeState>(m, "TwoModeState")
      .def(py::init([](const std::vector<std::tuple<int, int, std::complex<double>>>& coefficients,
                       double delta1, double delta2, bool normalize) {
             std::vector<ModePairAmplitude> c;
             for (const auto& [a, b, amplitude] : coefficients) c.push_back({a, b, amplitude});
             return normalize ? TwoModeState::normalized(std::move(c), delta1, delta2)
                              : TwoModeState(std::move(c), delta1, delta2);
           }),
           py::arg("coefficients"), py::arg("delta1") = 0.0, py::arg("delta2") = 0.0,
           py::arg("normalize") = false)
      .def_property_readonly("delta1", &TwoModeState::delta1)
      .def_property_readonly("delta2", &TwoModeState::delta2)
      .def("amplitude", &TwoModeState::amplitude, py::arg("m"), py::arg("n"));

  m.def("qubit_state", &qubit_to_state, py::arg("spec"));
  m.def(
      "bell_state",
      [](const std::string& kind, int m0) { return bell_state(parse_bell_kind(kind), m0); },
      py::arg("kind"), py::arg("m0"));

  m.def(
      "wigner",
      [](const GeneralState& s, double theta, double p) {
        return wigner_bilinear_1d(s, PhasePoint(theta, p));
      },
      py::arg("state"), py::arg("theta"), py::arg("p"));
  m.def(
      "wigner",
      [](const TwoModeState& s, double t1, double t2, double p1, double p2) {
        return wigner_bilinear_2d(s, PhasePoint4(t1, t2, p1, p2));
      },
      py::arg("state"), py::arg("theta1"), py::arg("theta2"), py::arg("p1"), py::arg("p2"));
  m.def(
      "qubit_wigner",
      [](const QubitSpec& q, double theta, double p) {
        return qubit_wigner(q, PhasePoint(theta, p));
      },
      py::arg("spec"), py::arg("theta"), py::arg("p"));
  m.def(
      "density_wigner",
      [](const BlochDensity& rho, double theta, double p) {
        return density_wigner(rho, PhasePoint(theta, p));
      },
      py::arg("rho"), py::arg("theta"), py::arg("p"));
  m.def(
      "bell_wigner",
      [](const std::string& kind, int m0, double t1, double t2, double p1, double p2) {
        return bell_wigner(parse_bell_kind(kind), m0, PhasePoint4(t1, t2, p1, p2));
      },
      py::arg("kind"), py::arg("m0"), py::arg("theta1"), py::arg("theta2"), py::arg("p1"),
      py::arg("p2"));
  m.def(
      "oracle_wigner",
      [](const GeneralState& s, double theta, double p, int nodes) {
        OracleOptions options;
        options.nodes = nodes;
        return oracle_wigner_1d(s, PhasePoint(theta, p), options).value;
      },
      py::arg("state"), py::arg("theta"), py::arg("p"), py::arg("nodes") = 512);
  m.def(
      "oracle_wigner",
      [](const TwoModeState& s, double t1, double t2, double p1, double p2, int nodes) {
        OracleOptions options;
        options.nodes = nodes;
        return oracle_wigner_2d(s, PhasePoint4(t1, t2, p1, p2), options).value;
      },
      py::arg("state"), py::arg("theta1"), py::arg("theta2"), py::arg("p1"), py::arg("p2"),
      py::arg("nodes") = 512);

  m.def("marginal_angle", py::overload_cast<const GeneralState&, double>(&marginal_angle),
        py::arg("state"), py::arg("theta"));
  m.def("marginal_momentum", py::overload_cast<const GeneralState&, double>(&marginal_momentum),
        py::arg("state"), py::arg("p"));
  m.def("transition_probability", &transition_probability_direct, py::arg("first"),
        py::arg("second"));
  m.def(
      "transition_probability_phase_space",
      [](const QubitSpec& a, const QubitSpec& b, int radius) {
        PhaseSpaceOptions options;
        options.truncation.radius = radius;
        return transition_probability_phase_space(a, b, options);
      },
      py::arg("first"), py::arg("second"), py::arg("radius") = 1000);
  m.def("density_overlap", &density_overlap, py::arg("first"), py::arg("second"));

  // JSON-returning command wrappers; the Python package decodes them.
  m.def(
      "_eval",
      [](const std::string& kind, const std::string& state, const std::string& grid,
         const std::string& path, const std::string& scale) {
        const StateInput input = state_input(kind, state);
        const PhaseGrid g = PhaseGrid::parse(grid, phase_axes(dimension(input)));
        return dump(to_json(cmd_eval(input, g, parse_eval_path(path), parse_scale(scale))));
      },
      py::arg("kind"), py::arg("state"), py::arg("grid"), py::arg("path"), py::arg("scale"));
  m.def(
      "_probs",
      [](const std::string& kind, const std::string& state, const std::string& method) {
        return dump(cmd_probs(state_input(kind, state), parse_probs_method(method)));
      },
      py::arg("kind"), py::arg("state"), py::arg("method"));
  m.def(
      "_verify",
      [](int radius, std::uint64_t seed) {
        const VerifyReport report = cmd_verify(radius, seed);
        return dump(report.json);
      },
      py::arg("radius"), py::arg("seed"));
  m.def(
      "_negativity",
      [](const std::string& kind, const std::string& state, const std::string& grid) {
        const StateInput input = state_input(kind, state);
        const PhaseGrid g = PhaseGrid::parse(grid, phase_axes(dimension(input)));
        return dump(to_json(cmd_negativity(input, g)));
      },
      py::arg("kind"), py::arg("state"), py::arg("grid"));
}
