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

#ifndef SWARMKIN_POINT_HPP
#define SWARMKIN_POINT_HPP

#include <cmath>

namespace swarmkin {

/// Position in R^1 or R^2. One-dimensional models keep `y == 0`.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point& operator+=(const Point& other) noexcept {
    x += other.x;
    y += other.y;
    return *this;
  }
  constexpr Point& operator-=(const Point& other) noexcept {
    x -= other.x;
    y -= other.y;
    return *this;
  }
  constexpr Point& operator*=(double s) noexcept {
    x *= s;
    y *= s;
    return *this;
  }

  [[nodiscard]] constexpr double operator[](int axis) const noexcept { return axis == 0 ? x : y; }
  [[nodiscard]] constexpr double& operator[](int axis) noexcept { return axis == 0 ? x : y; }

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] constexpr Point operator+(Point a, const Point& b) noexcept { return a += b; }
[[nodiscard]] constexpr Point operator-(Point a, const Point& b) noexcept { return a -= b; }
[[nodiscard]] constexpr Point operator*(Point a, double s) noexcept { return a *= s; }
[[nodiscard]] constexpr Point operator*(double s, Point a) noexcept { return a *= s; }

[[nodiscard]] constexpr double dot(const Point& a, const Point& b) noexcept {
  return a.x * b.x + a.y * b.y;
}
[[nodiscard]] constexpr double norm2(const Point& a) noexcept { return dot(a, a); }
[[nodiscard]] inline double norm(const Point& a) noexcept { return std::sqrt(norm2(a)); }

[[nodiscard]] inline bool is_finite(const Point& a) noexcept {
  return std::isfinite(a.x) && std::isfinite(a.y);
}

}  // namespace swarmkin

#endif  // SWARMKIN_POINT_HPP
