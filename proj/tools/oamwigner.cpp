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

// Command-line front end: builds a state from flags or JSON and writes grid
// data, probabilities, overlaps or verification reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oamwigner/commands.hpp"
#include "oamwigner/errors.hpp"
#include "oamwigner/io.hpp"

namespace {

using namespace oamwigner;

struct StateFlags {
  std::string qubit;
  std::string bell;
  std::string two_qubit;
  std::string density;
  std::string state_json;

  void attach(CLI::App* app, const std::string& suffix = "") {
    auto* group = app->add_option_group("state" + suffix);
    group->add_option("--qubit" + suffix, qubit, "m0,m1,alpha,beta[,delta]");
    group->add_option("--bell" + suffix, bell, "kind,m0 with kind in phi+, phi-, psi+, psi-");
    group->add_option("--two-qubit" + suffix, two_qubit,
                      "m0,m1,n0,n1,beta,gamma,phi,alpha10,alpha01,alpha11[,delta1,delta2]");
    group->add_option("--density" + suffix, density, "m0,m1,a1,a2,a3[,delta]");
    group->add_option("--state-json" + suffix, state_json, "JSON state file");
    group->require_option(1);
  }

  StateInput build() const {
    if (!qubit.empty()) return parse_qubit(qubit);
    if (!bell.empty()) return parse_bell(bell);
    if (!two_qubit.empty()) return parse_two_qubit(two_qubit);
    if (!density.empty()) return parse_density(density);
    auto state = read_state_file(state_json);
    if (auto* s = std::get_if<GeneralState>(&state)) return *s;
    return std::get<TwoModeState>(state);
  }
};

struct OutputFlags {
  std::string out;
  std::string format = "csv";

  void attach(CLI::App* app) {
    app->add_option("--out", out, "output file (default: stdout)");
    app->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
};

// Writes through a file when --out is given.
template <class Writer>
void emit(const OutputFlags& flags, Writer&& writer) {
  if (flags.out.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream file(flags.out);
  if (!file) {
    throw InvalidArgument("cannot write '" + flags.out + "'");
  }
  writer(file);
}

void emit_json(const OutputFlags& flags, const nlohmann::json& json) {
  emit(flags, [&](std::ostream& out) { out << json.dump(2) << "\n"; });
}

void emit_grid(const OutputFlags& flags, const GridResult& result) {
  if (flags.format == "json") {
    emit_json(flags, to_json(result));
  } else {
    emit(flags, [&](std::ostream& out) { write_csv(out, result); });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner functions on the angle-OAM cylinder and torus"};
  app.require_subcommand(1);

  StateFlags state_flags;
  StateFlags second_flags;
  OutputFlags output;
  std::string grid_text;
  std::string path = "bilinear";
  std::string scale = "raw";
  std::string axis = "angle";
  std::string probs_method = "analytic";
  std::string overlap_method = "direct";
  int radius = 1000;
  std::uint64_t seed = 20240601;
  int oracle_nodes = 512;

  auto* eval = app.add_subcommand("eval", "Wigner function on a phase-space grid");
  state_flags.attach(eval);
  output.attach(eval);
  eval->add_option("--grid", grid_text, "theta=LO:HI:N,p=LO:HI:N (or theta1,theta2,p1,p2)")
      ->required();
  eval->add_option("--path", path, "closed, bilinear or oracle")->capture_default_str();
  eval->add_option("--scale", scale, "raw or two-pi-d")->capture_default_str();
  eval->add_option("--oracle-nodes", oracle_nodes, "oracle quadrature nodes")->capture_default_str();

  auto* marginal = app.add_subcommand("marginal", "angle or momentum marginal on a grid");
  state_flags.attach(marginal);
  output.attach(marginal);
  marginal->add_option("--axis", axis, "angle or momentum")->capture_default_str();
  marginal->add_option("--grid", grid_text, "theta=... or p=... (two-mode: two axes)")->required();

  auto* probs = app.add_subcommand("probs", "OAM mode probabilities as JSON");
  state_flags.attach(probs);
  output.attach(probs);
  probs->add_option("--method", probs_method, "analytic or quadrature")->capture_default_str();
  probs->add_option("--trunc-radius", radius, "momentum truncation radius")->capture_default_str();

  auto* overlap = app.add_subcommand("overlap", "tr(rho1 rho2) of two qubit or density states");
  state_flags.attach(overlap);
  second_flags.attach(overlap, "2");
  output.attach(overlap);
  overlap->add_option("--method", overlap_method, "direct or phase-space")
      ->capture_default_str();
  overlap->add_option("--trunc-radius", radius, "momentum truncation radius")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the numerical self-checks");
  output.attach(verify);
  verify->add_option("--trunc-radius", radius, "momentum truncation radius")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  auto* negativity = app.add_subcommand("negativity", "minimum and negative fraction on a grid");
  state_flags.attach(negativity);
  output.attach(negativity);
  negativity->add_option("--grid", grid_text, "phase-space grid")->required();
  negativity->add_option("--path", path, "closed, bilinear or oracle")->capture_default_str();

  TorusSpiralSpec spiral_spec;
  std::vector<int> spiral_modes{1, -1, 1, -1};
  std::string alpha11 = "0";
  std::string alpha01 = "0";
  std::string minus = "0";
  int samples = 256;
  auto* spiral = app.add_subcommand("spiral", "sample the torus spiral of the Bell interference");
  output.attach(spiral);
  spiral->add_option("--modes", spiral_modes, "m0,m1,n0,n1")
      ->delimiter(',')
      ->expected(4)
      ->capture_default_str();
  spiral->add_option("--alpha11", alpha11, "phase alpha11")->capture_default_str();
  spiral->add_option("--alpha01", alpha01, "phase alpha01")->capture_default_str();
  spiral->add_option("--vartheta-minus", minus, "fixed vartheta_-")->capture_default_str();
  spiral->add_option("--samples", samples, "number of samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const StateInput state = state_flags.build();
      const auto axes = phase_axes(dimension(state));
      const auto grid = PhaseGrid::parse(grid_text, axes);
      OracleOptions oracle;
      oracle.nodes = oracle_nodes;
      emit_grid(output, cmd_eval(state, grid, parse_eval_path(path), parse_scale(scale), oracle));
    } else if (marginal->parsed()) {
      const StateInput state = state_flags.build();
      const MarginalAxis which = parse_marginal_axis(axis);
      const int d = dimension(state);
      const auto axes = which == MarginalAxis::Angle ? angle_axes(d) : momentum_axes(d);
      emit_grid(output, cmd_marginal(state, which, PhaseGrid::parse(grid_text, axes)));
    } else if (probs->parsed()) {
      TruncationOptions truncation;
      truncation.radius = radius;
      emit_json(output, cmd_probs(state_flags.build(), parse_probs_method(probs_method), truncation));
    } else if (overlap->parsed()) {
      PhaseSpaceOptions options;
      options.truncation.radius = radius;
      const double value = cmd_overlap(state_flags.build(), second_flags.build(),
                                       parse_overlap_method(overlap_method), options);
      emit_json(output, {{"overlap", value}, {"method", overlap_method}});
    } else if (verify->parsed()) {
      const VerifyReport report = cmd_verify(radius, seed);
      emit_json(output, report.json);
      if (!report.passed) {
        std::cerr << "verification failed\n";
        return 1;
      }
    } else if (negativity->parsed()) {
      const StateInput state = state_flags.build();
      const auto grid = PhaseGrid::parse(grid_text, phase_axes(dimension(state)));
      emit_json(output, to_json(cmd_negativity(state, grid, parse_eval_path(path))));
    } else if (spiral->parsed()) {
      spiral_spec = {spiral_modes[0], spiral_modes[1], spiral_modes[2], spiral_modes[3],
                     parse_real(alpha11), parse_real(alpha01)};
      const auto result = cmd_spiral(spiral_spec, samples, parse_real(minus));
      if (output.format == "json") {
        emit_json(output, to_json(result));
      } else {
        emit(output, [&](std::ostream& out) { write_csv(out, result); });
      }
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
