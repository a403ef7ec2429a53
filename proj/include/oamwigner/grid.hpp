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

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace oamwigner {

/// One coordinate of a sampling grid. Angle axes (theta, theta1, theta2) are
/// sampled half-open on [lo, hi) so a full turn has no duplicated endpoint;
/// momentum axes are sampled on the closed interval. A held axis has one node.
struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int nodes = 1;
  bool periodic = false;

  bool held() const { return nodes == 1; }
  std::vector<double> samples() const;
};

/// Axis names of the full phase space in canonical order.
std::vector<std::string> phase_axes(int dimension);
std::vector<std::string> angle_axes(int dimension);
std::vector<std::string> momentum_axes(int dimension);

class PhaseGrid {
 public:
  /// Parses "theta=-pi:pi:64,p=-3:3:121". Each entry is either LO:HI:N or a
  /// single held value. Every name in `axis_names` must be given exactly once
  /// and nothing else is allowed. Throws InvalidGrid.
  static PhaseGrid parse(const std::string& text, std::span<const std::string> axis_names);

  explicit PhaseGrid(std::vector<GridAxis> axes);

  const std::vector<GridAxis>& axes() const { return axes_; }
  std::size_t size() const;

  /// Calls f(coordinates) for every grid point in row-major order (last axis
  /// fastest) and collects the results.
  std::vector<double> evaluate(const std::function<double(std::span<const double>)>& f) const;

 private:
  std::vector<GridAxis> axes_;
};

struct GridMetadata {
  std::string quantity;  // "wigner", "marginal-angle", ...
  std::string state;
  std::string path;
  std::string scale;
};

struct GridResult {
  std::vector<GridAxis> axes;
  std::vector<double> values;  // row-major, last axis fastest
  GridMetadata metadata;
};

/// Long format: one row per grid point, coordinate columns then the value,
/// 17 significant digits, preceded by '#' comment lines.
void write_csv(std::ostream& out, const GridResult& result);

nlohmann::json to_json(const GridResult& result);

}  // namespace oamwigner
