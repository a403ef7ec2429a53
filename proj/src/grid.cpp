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

#include "oamwigner/grid.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "oamwigner/errors.hpp"
#include "oamwigner/io.hpp"

namespace oamwigner {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

double grid_number(const std::string& text, const std::string& entry) {
  double value = 0.0;
  try {
    value = parse_real(text);
  } catch (const InvalidArgument&) {
    throw InvalidGrid("bad number in grid entry '" + entry + "'");
  }
  if (!std::isfinite(value)) {
    throw InvalidGrid("grid entry '" + entry + "' is not finite");
  }
  return value;
}

GridAxis parse_axis(const std::string& name, const std::string& spec, const std::string& entry) {
  GridAxis axis;
  axis.name = name;
  axis.periodic = name.rfind("theta", 0) == 0;
  const auto fields = split(spec, ':');
  if (fields.size() == 1) {
    axis.lo = axis.hi = grid_number(fields[0], entry);
    return axis;
  }
  if (fields.size() != 3) {
    throw InvalidGrid("grid entry '" + entry + "' must be name=LO:HI:N or name=VALUE");
  }
  axis.lo = grid_number(fields[0], entry);
  axis.hi = grid_number(fields[1], entry);
  std::size_t used = 0;
  long nodes = 0;
  try {
    nodes = std::stol(fields[2], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != fields[2].size() || nodes < 1 || nodes > 100'000'000) {
    throw InvalidGrid("grid entry '" + entry + "' needs a positive node count");
  }
  axis.nodes = static_cast<int>(nodes);
  if (axis.nodes > 1 && !(axis.hi > axis.lo)) {
    throw InvalidGrid("grid entry '" + entry + "' needs LO < HI");
  }
  if (axis.nodes == 1) {
    axis.hi = axis.lo;
  }
  return axis;
}

std::string format_number(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

std::vector<double> GridAxis::samples() const {
  std::vector<double> out(static_cast<std::size_t>(nodes));
  if (nodes == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (periodic ? nodes : nodes - 1);
  for (int i = 0; i < nodes; ++i) {
    out[static_cast<std::size_t>(i)] = lo + i * step;
  }
  if (!periodic) {
    out.back() = hi;
  }
  return out;
}

std::vector<std::string> phase_axes(int dimension) {
  if (dimension == 1) {
    return {"theta", "p"};
  }
  return {"theta1", "theta2", "p1", "p2"};
}

std::vector<std::string> angle_axes(int dimension) {
  if (dimension == 1) {
    return {"theta"};
  }
  return {"theta1", "theta2"};
}

std::vector<std::string> momentum_axes(int dimension) {
  if (dimension == 1) {
    return {"p"};
  }
  return {"p1", "p2"};
}

PhaseGrid PhaseGrid::parse(const std::string& text, std::span<const std::string> axis_names) {
  std::vector<GridAxis> axes(axis_names.size());
  std::vector<bool> seen(axis_names.size(), false);
  for (const auto& entry : split(text, ',')) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw InvalidGrid("grid entry '" + entry + "' has no '='");
    }
    const std::string name = entry.substr(0, eq);
    const auto it = std::find(axis_names.begin(), axis_names.end(), name);
    if (it == axis_names.end()) {
      throw InvalidGrid("unexpected grid axis '" + name + "'");
    }
    const auto index = static_cast<std::size_t>(it - axis_names.begin());
    if (seen[index]) {
      throw InvalidGrid("grid axis '" + name + "' given twice");
    }
    seen[index] = true;
    axes[index] = parse_axis(name, entry.substr(eq + 1), entry);
  }
  for (std::size_t i = 0; i < axis_names.size(); ++i) {
    if (!seen[i]) {
      throw InvalidGrid("grid axis '" + axis_names[i] + "' is missing; held axes need a value");
    }
  }
  return PhaseGrid(std::move(axes));
}

PhaseGrid::PhaseGrid(std::vector<GridAxis> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) {
    throw InvalidGrid("grid has no axes");
  }
  for (const auto& axis : axes_) {
    if (axis.nodes < 1 || !std::isfinite(axis.lo) || !std::isfinite(axis.hi) ||
        (axis.nodes > 1 && !(axis.hi > axis.lo))) {
      throw InvalidGrid("invalid grid axis '" + axis.name + "'");
    }
  }
}

std::size_t PhaseGrid::size() const {
  std::size_t n = 1;
  for (const auto& axis : axes_) {
    n *= static_cast<std::size_t>(axis.nodes);
  }
  return n;
}

std::vector<double> PhaseGrid::evaluate(
    const std::function<double(std::span<const double>)>& f) const {
  std::vector<std::vector<double>> samples;
  for (const auto& axis : axes_) {
    samples.push_back(axis.samples());
  }
  std::vector<double> values;
  values.reserve(size());
  std::vector<std::size_t> index(axes_.size(), 0);
  std::vector<double> point(axes_.size());
  for (std::size_t count = size(); count > 0; --count) {
    for (std::size_t k = 0; k < axes_.size(); ++k) {
      point[k] = samples[k][index[k]];
    }
    values.push_back(f(point));
    for (std::size_t k = axes_.size(); k-- > 0;) {
      if (++index[k] < samples[k].size()) {
        break;
      }
      index[k] = 0;
    }
  }
  return values;
}

void write_csv(std::ostream& out, const GridResult& result) {
  out << "# oamwigner " << result.metadata.quantity << "\n";
  out << "# state: " << result.metadata.state << "\n";
  out << "# path: " << result.metadata.path << "\n";
  out << "# scale: " << result.metadata.scale << "\n";
  out << "# ";
  for (const auto& axis : result.axes) {
    out << axis.name << ",";
  }
  out << "value\n";

  const PhaseGrid grid(result.axes);
  std::size_t row = 0;
  grid.evaluate([&](std::span<const double> point) {
    for (double x : point) {
      out << format_number(x) << ",";
    }
    out << format_number(result.values.at(row++)) << "\n";
    return 0.0;
  });
}

nlohmann::json to_json(const GridResult& result) {
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& axis : result.axes) {
    axes.push_back({{"name", axis.name},
                    {"lo", axis.lo},
                    {"hi", axis.hi},
                    {"nodes", axis.nodes},
                    {"endpoint", !axis.periodic},
                    {"samples", axis.samples()}});
  }
  return {{"quantity", result.metadata.quantity},
          {"state", result.metadata.state},
          {"path", result.metadata.path},
          {"scale", result.metadata.scale},
          {"axes", axes},
          {"values", result.values}};
}

}  // namespace oamwigner
