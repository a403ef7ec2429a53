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
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "oamwigner/commands.hpp"
#include "oamwigner/errors.hpp"
#include "oamwigner/grid.hpp"
#include "oamwigner/io.hpp"
#include "test_support.hpp"

using namespace oamwigner;
using nlohmann::json;

namespace {

constexpr double kInv2Pi = 1.0 / (2 * M_PI);

PhaseGrid grid(const std::string& text, int dimension) {
  return PhaseGrid::parse(text, phase_axes(dimension));
}

int run(const std::string& args) {
  const std::string command = std::string(OAMWIGNER_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseReal, AcceptsMultiplesOfPi) {
  EXPECT_EQ(parse_real("0.25"), 0.25);
  EXPECT_EQ(parse_real("pi"), M_PI);
  EXPECT_EQ(parse_real("-pi/2"), -M_PI / 2);
  EXPECT_NEAR(parse_real("3pi/4"), 3 * M_PI / 4, 1e-15);
  EXPECT_NEAR(parse_real("0.5*pi"), M_PI / 2, 1e-15);
  for (const char* bad : {"", "abc", "pi/0", "1.5x", "nan"}) {
    EXPECT_THROW(parse_real(bad), InvalidArgument) << bad;
  }
}

TEST(StateJson, RoundTrips) {
  const GeneralState s({{2, {0.6, 0.0}}, {-1, {0.0, 0.8}}}, 0.3);
  const auto back = std::get<GeneralState>(state_from_json(to_json(s)));
  EXPECT_EQ(back.delta(), 0.3);
  ASSERT_EQ(back.coefficients().size(), 2u);
  EXPECT_EQ(back.amplitude(2), s.amplitude(2));
  EXPECT_EQ(back.amplitude(-1), s.amplitude(-1));

  const TwoModeState bell = bell_state(BellKind::PsiPlus, 2);
  const auto back2 = std::get<TwoModeState>(state_from_json(to_json(bell)));
  EXPECT_EQ(back2.coefficients().size(), 2u);
}

TEST(StateJson, NormalizeAndErrors) {
  const auto s = std::get<GeneralState>(
      state_from_json(json::parse(R"({"coefficients": [[0, 1, 0], [1, 1, 0]], "normalize": true})")));
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(s.delta(), 0.0);
  EXPECT_THROW(state_from_json(json::parse(R"({"coefficients": [[0, 1, 0], [1, 1, 0]]})")),
               NonNormalizedState);
  for (const char* bad : {R"({})", R"({"coefficients": []})", R"({"coefficients": [[0, 1]]})",
                          R"({"coefficients": [[0, 1, 0], [0, 1, 0, 0]]})",
                          R"({"coefficients": [["a", 1, 0]]})", R"([1, 2])"}) {
    EXPECT_THROW(state_from_json(json::parse(bad)), InvalidArgument) << bad;
  }
}

TEST(Grid, ParsesAndOrdersAxes) {
  const PhaseGrid g = grid("p=-3:3:121,theta=-pi:pi:64", 1);
  ASSERT_EQ(g.axes().size(), 2u);
  EXPECT_EQ(g.axes()[0].name, "theta");
  EXPECT_EQ(g.size(), 64u * 121u);
  const auto theta = g.axes()[0].samples();
  EXPECT_EQ(theta.front(), -M_PI);
  EXPECT_NEAR(theta.back(), M_PI - 2 * M_PI / 64, 1e-15);
  const auto p = g.axes()[1].samples();
  EXPECT_EQ(p.front(), -3.0);
  EXPECT_EQ(p.back(), 3.0);
  EXPECT_NEAR(p[60], 0.0, 1e-15);
}

TEST(Grid, HeldAxes) {
  const PhaseGrid g = grid("theta1=0.5,theta2=0:1:1,p1=-1:1:3,p2=pi", 2);
  EXPECT_TRUE(g.axes()[0].held());
  EXPECT_TRUE(g.axes()[1].held());
  EXPECT_EQ(g.axes()[3].samples().front(), M_PI);
  EXPECT_EQ(g.size(), 3u);
}

TEST(Grid, Errors) {
  for (const char* bad : {"theta=-pi:pi:64", "theta=0,p=0,q=1", "theta=0,theta=1,p=0",
                          "theta=a:1:3,p=0", "theta=0,p=1:0:3", "theta=0,p=0:1:0",
                          "theta=0,p=0:inf:3", "theta=0,p", "theta=0:1,p=0"}) {
    EXPECT_THROW(grid(bad, 1), InvalidGrid) << bad;
  }
}

TEST(Grid, CsvLayout) {
  const GridResult r = cmd_eval(StateInput{QubitSpec{1, -1, 0.0, M_PI / 4, 0.0}},
                                grid("theta=0,p=-1:1:3", 1), EvalPath::Bilinear, Scale::TwoPiD);
  std::ostringstream out;
  write_csv(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0], "# oamwigner wigner");
  EXPECT_EQ(lines[4], "# theta,p,value");
  EXPECT_EQ(lines[6], "0,0,1");
  const json j = to_json(r);
  EXPECT_EQ(j["values"].size(), 3u);
}

TEST(Eval, EvenCatGrid) {
  const StateInput cat = QubitSpec{1, -1, 0.0, M_PI / 4, 0.0};
  const PhaseGrid g = grid("theta=-pi:pi:64,p=-3:3:121", 1);
  const GridResult r = cmd_eval(cat, g, EvalPath::Bilinear, Scale::TwoPiD);
  const auto thetas = g.axes()[0].samples();
  const auto ps = g.axes()[1].samples();
  ASSERT_EQ(r.values.size(), 64u * 121u);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      ASSERT_NEAR(r.values[i * ps.size() + j], testing_support::even_cat(thetas[i], ps[j]), 1e-12);
    }
  }
  const GridResult closed = cmd_eval(cat, g, EvalPath::Closed, Scale::TwoPiD);
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    ASSERT_NEAR(closed.values[k], r.values[k], 1e-12);
  }
}

TEST(Eval, SingletSliceGrids) {
  const StateInput psi = BellSpec{BellKind::PsiMinus, 1};
  for (double p2 : {0.0, 0.5}) {
    std::ostringstream spec;
    spec << "theta1=-pi:pi:64,theta2=0.4,p1=-3:3:121,p2=" << p2;
    const PhaseGrid g = grid(spec.str(), 2);
    const GridResult r = cmd_eval(psi, g, EvalPath::Closed, Scale::TwoPiD);
    const auto t1 = g.axes()[0].samples();
    const auto p1 = g.axes()[2].samples();
    for (std::size_t i = 0; i < t1.size(); ++i) {
      for (std::size_t j = 0; j < p1.size(); ++j) {
        const double expected = p2 == 0.0 ? testing_support::singlet_zero_slice(t1[i], 0.4, p1[j])
                                          : testing_support::singlet_half_slice(t1[i], 0.4, p1[j]);
        ASSERT_NEAR(r.values[i * p1.size() + j], expected, 1e-12);
      }
    }
  }
}

TEST(Eval, PathsAgreeAndAreDeterministic) {
  const StateInput q = QubitSpec{2, -1, 1.0, 0.7, 0.25};
  const PhaseGrid g = grid("theta=-pi:pi:5,p=-2:3:4", 1);
  const auto closed = cmd_eval(q, g, EvalPath::Closed, Scale::Raw);
  const auto bilinear = cmd_eval(q, g, EvalPath::Bilinear, Scale::Raw);
  const auto oracle = cmd_eval(q, g, EvalPath::Oracle, Scale::Raw);
  for (std::size_t k = 0; k < closed.values.size(); ++k) {
    EXPECT_NEAR(closed.values[k], bilinear.values[k], 1e-12);
    EXPECT_NEAR(closed.values[k], oracle.values[k], 1e-9);
  }
  EXPECT_EQ(cmd_eval(q, g, EvalPath::Bilinear, Scale::Raw).values, bilinear.values);
}

TEST(Eval, RejectsMismatchedInputs) {
  const StateInput general = GeneralState({{0, 1.0}});
  EXPECT_THROW(cmd_eval(general, grid("theta=0,p=0", 1), EvalPath::Closed, Scale::Raw),
               InvalidArgument);
  EXPECT_THROW(cmd_eval(QubitSpec{0, 1, 0, 0, 0}, grid("theta1=0,theta2=0,p1=0,p2=0", 2),
                        EvalPath::Bilinear, Scale::Raw),
               InvalidGrid);
}

TEST(Shorthand, Parsers) {
  const QubitSpec q = parse_qubit("1,-1,pi/2,pi/4,0.5");
  EXPECT_EQ(q.m0, 1);
  EXPECT_EQ(q.alpha, M_PI / 2);
  EXPECT_EQ(q.delta, 0.5);
  EXPECT_THROW(parse_qubit("1,1,0,0"), DegenerateModes);
  EXPECT_THROW(parse_qubit("1,2,0"), InvalidArgument);
  EXPECT_EQ(parse_bell("psi-,2").kind, BellKind::PsiMinus);
  EXPECT_THROW(parse_bell("psi-,0"), ZeroMode);
  EXPECT_NO_THROW(parse_two_qubit("0,1,0,1,0.3,0.4,0.5,0,0,0"));
  EXPECT_THROW(parse_two_qubit("0,1,0,1,0.3,0.4,0.5,0,0,0,0.1"), InvalidArgument);
  EXPECT_THROW(parse_density("0,1,1,1,0"), InvalidBlochVector);
}

TEST(Marginal, AngleAndMomentum) {
  const StateInput q = QubitSpec{0, 1, 0.0, M_PI / 3, 0.0};
  const auto angle =
      cmd_marginal(q, MarginalAxis::Angle, PhaseGrid::parse("theta=0", angle_axes(1)));
  EXPECT_NEAR(angle.values[0], (1 + std::sin(2 * M_PI / 3)) * kInv2Pi, 1e-15);
  const auto momentum =
      cmd_marginal(q, MarginalAxis::Momentum, PhaseGrid::parse("p=0:1:2", momentum_axes(1)));
  EXPECT_NEAR(momentum.values[0], 0.25, 1e-15);
  EXPECT_NEAR(momentum.values[1], 0.75, 1e-15);
}

TEST(Probs, UnequalQubit) {
  const StateInput unequal_qubit = QubitSpec{1, 0, 0.0, M_PI / 3, 0.0};
  const json analytic = cmd_probs(unequal_qubit, ProbsMethod::Analytic);
  EXPECT_NEAR(analytic["1"].get<double>(), 0.25, 1e-15);
  EXPECT_NEAR(analytic["0"].get<double>(), 0.75, 1e-15);
  const json quadrature = cmd_probs(unequal_qubit, ProbsMethod::Quadrature);
  EXPECT_NEAR(quadrature["1"].get<double>(), 0.25, 1e-3);
  EXPECT_NEAR(quadrature["0"].get<double>(), 0.75, 1e-3);

  const json bell = cmd_probs(BellSpec{BellKind::PhiPlus, 1}, ProbsMethod::Quadrature);
  EXPECT_NEAR(bell["1,1"].get<double>(), 0.5, 1e-3);
  EXPECT_NEAR(bell["-1,-1"].get<double>(), 0.5, 1e-3);
}

TEST(Overlap, IdenticalAndOrthogonal) {
  const StateInput a = QubitSpec{1, -1, 0.0, M_PI / 4, 0.0};
  const StateInput b = QubitSpec{1, -1, M_PI, M_PI / 4, 0.0};
  EXPECT_NEAR(cmd_overlap(a, a, OverlapMethod::Direct), 1.0, 1e-14);
  EXPECT_NEAR(cmd_overlap(a, b, OverlapMethod::Direct), 0.0, 1e-14);
  EXPECT_NEAR(cmd_overlap(a, a, OverlapMethod::PhaseSpace), 1.0, 1e-3);
  const StateInput mixed = BlochDensity{1, -1, {0, 0, 0}, 0.0};
  EXPECT_NEAR(cmd_overlap(a, mixed, OverlapMethod::Direct), 0.5, 1e-14);
  EXPECT_THROW(cmd_overlap(a, BellSpec{}, OverlapMethod::Direct), InvalidArgument);
}

TEST(Verify, Passes) {
  const VerifyReport report = cmd_verify(1000, 20240601);
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.json["passed"].get<bool>());
}

TEST(Negativity, BellMinimum) {
  const StateInput psi = BellSpec{BellKind::PsiMinus, 1};
  const PhaseGrid g = grid("theta1=-pi:pi:64,theta2=0,p1=-2:2:41,p2=0", 2);
  const NegativityReport r = cmd_negativity(psi, g);
  EXPECT_NEAR(r.min_value, -kInv2Pi * kInv2Pi, 1e-15);
  EXPECT_EQ(r.samples, 64u * 41u);
  EXPECT_GT(r.negative_fraction, 0.0);
  // theta1 = theta2 attains the minimum (the reported point may be an
  // equivalent one half a turn away).
  const GridResult values = cmd_eval(psi, g, EvalPath::Bilinear, Scale::Raw);
  EXPECT_NEAR(values.values[32 * 41 + 20], r.min_value, 1e-15);
  const json j = to_json(r);
  EXPECT_TRUE(j.contains("argmin") && j.contains("negative_fraction"));
}

TEST(Negativity, BasisStateIsPositiveNearItsMode) {
  const StateInput basis = GeneralState({{2, 1.0}});
  const NegativityReport r = cmd_negativity(basis, grid("theta=-pi:pi:16,p=1.5:2.5:21", 1));
  EXPECT_GT(r.min_value, 0.0);
  EXPECT_EQ(r.negative_fraction, 0.0);
}

TEST(Negativity, BellZerosAtIntegerMomenta) {
  const StateInput phi = BellSpec{BellKind::PhiPlus, 1};
  const NegativityReport r = cmd_negativity(phi, grid("theta1=-pi:pi:8,theta2=-pi:pi:8,p1=2,p2=-3", 2));
  EXPECT_NEAR(r.min_value, 0.0, 1e-15);
}

TEST(Spiral, SlopesAndClosure) {
  const TorusSpiralSpec spec{1, -1, 1, -1, 0.3, 0.2};
  EXPECT_NEAR(spiral_period(spec), 8 * M_PI, 1e-14);
  const auto samples = cmd_spiral(spec, 256, 0.1);
  ASSERT_EQ(samples.size(), 256u);
  const double step = spiral_period(spec) / 256;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double d1 = std::remainder(samples[k].theta1 - samples[k - 1].theta1, 2 * M_PI);
    const double d2 = std::remainder(samples[k].theta2 - samples[k - 1].theta2, 2 * M_PI);
    EXPECT_NEAR(std::abs(d1), step / 4, 1e-12);
    EXPECT_NEAR(std::abs(d2), step / 4, 1e-12);
  }
  const TorusAngles start = invert_interference(0.0, 0.1, spec);
  const TorusAngles end = invert_interference(spiral_period(spec), 0.1, spec);
  EXPECT_NEAR(std::remainder(end.theta1 - start.theta1, 2 * M_PI), 0.0, 1e-12);
  EXPECT_NEAR(std::remainder(end.theta2 - start.theta2, 2 * M_PI), 0.0, 1e-12);

  const auto one = cmd_spiral(spec, 1, 0.1);
  EXPECT_NEAR(std::remainder(one[0].theta1 - start.theta1, 2 * M_PI), 0.0, 1e-15);
  EXPECT_NEAR(std::remainder(one[0].theta2 - start.theta2, 2 * M_PI), 0.0, 1e-15);
  EXPECT_THROW(spiral_period({1, 1, 0, 1, 0, 0}), DegenerateModes);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("eval --qubit 1,-1,0,pi/4 --grid theta=-pi:pi:4,p=-1:1:3"), 0);
  EXPECT_EQ(run("probs --bell phi+,1"), 0);
  EXPECT_EQ(run("eval --qubit 0,0,0,0 --grid theta=0,p=0"), 2);
  EXPECT_EQ(run("eval --qubit 0,1,0,0 --grid theta=0"), 2);
  EXPECT_EQ(run("eval --qubit 0,1,0,0 --bell phi+,1 --grid theta=0,p=0"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("eval --qubit 0,1,0,0 --grid theta=0,p=40.3 --path oracle --oracle-nodes 24"), 1);
}
