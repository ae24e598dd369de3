// Copyright 2026 The swarmkin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWARMKIN_RECORD_HPP
#define SWARMKIN_RECORD_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "swarmkin/point.hpp"

namespace swarmkin {

/// Time series shared by particle runs and grid solves, one entry per recorded time.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<double> mass;      ///< particle runs record 1 (count is conserved)
  std::vector<Point> mean;
  std::vector<Point> stddev;     ///< per-coordinate spread around the mean
  std::vector<double> energy;    ///< mean of |x|^2 / 2
  std::vector<double> entropy;   ///< relative entropy against a reference; empty if none

  [[nodiscard]] bool empty() const noexcept { return times.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
};

/// Number of steps ceil(t_end / dt); a ratio within 1e-9 of an integer counts as that integer.
[[nodiscard]] inline std::uint64_t step_count(double t_end, double dt) {
  const double ratio = t_end / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(ratio));
}

}  // namespace swarmkin

#endif  // SWARMKIN_RECORD_HPP
