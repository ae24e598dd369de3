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

#ifndef SWARMKIN_GRID_HPP
#define SWARMKIN_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "swarmkin/point.hpp"

namespace swarmkin {

/// Uniform node layout along one axis: nodes at lo + i*dx, i = 0..n-1.
struct GridAxis {
  double lo = 0.0;
  double dx = 1.0;
  std::size_t n = 1;

  /// Axis with `n >= 2` nodes spanning the closed interval [lo, hi].
  static GridAxis from_bounds(double lo, double hi, std::size_t n);

  [[nodiscard]] double hi() const noexcept { return lo + static_cast<double>(n - 1) * dx; }
  [[nodiscard]] double node(std::size_t i) const noexcept { return lo + static_cast<double>(i) * dx; }
  /// Midpoint between node i and node i+1.
  [[nodiscard]] double interface(std::size_t i) const noexcept {
    return lo + (static_cast<double>(i) + 0.5) * dx;
  }

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

/// Nonnegative density sampled at the nodes of a 1D line or a 2D square tensor grid.
///
/// Values are stored row-major with the first coordinate fastest: the node
/// (i, j) lives at `j * nx + i`. Both axes of a 2D grid share the same layout.
class GridField {
 public:
  GridField() = default;
  GridField(GridAxis axis, int dim);

  /// Fills the grid with `density(node)` at every node.
  static GridField sample(GridAxis axis, int dim, const std::function<double(Point)>& density);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const GridAxis& axis() const noexcept { return axis_; }
  [[nodiscard]] std::size_t nx() const noexcept { return axis_.n; }
  [[nodiscard]] double dx() const noexcept { return axis_.dx; }
  [[nodiscard]] double cell_volume() const noexcept { return dim_ == 1 ? axis_.dx : axis_.dx * axis_.dx; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] std::span<double> values() noexcept { return values_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double& operator[](std::size_t k) noexcept { return values_[k]; }
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return values_[k]; }
  [[nodiscard]] double& at(std::size_t i, std::size_t j = 0) noexcept { return values_[j * axis_.n + i]; }
  [[nodiscard]] double at(std::size_t i, std::size_t j = 0) const noexcept { return values_[j * axis_.n + i]; }

  /// Coordinates of the node stored at flat index k.
  [[nodiscard]] Point node(std::size_t k) const noexcept;

  [[nodiscard]] double mass() const noexcept;
  /// Unnormalized first moment, sum of x f dx^d.
  [[nodiscard]] Point first_moment() const noexcept;
  /// First moment divided by the mass.
  [[nodiscard]] Point mean() const;
  /// Sum of |x|^2/2 f dx^d divided by the mass.
  [[nodiscard]] double energy() const;

  /// Rescales the values so that mass() == 1 (up to rounding).
  void normalize();

  /// Same dimension and node layout, up to rounding in lo and dx.
  [[nodiscard]] bool same_grid(const GridField& other) const noexcept;

 private:
  GridAxis axis_{};
  int dim_ = 1;
  std::vector<double> values_;
};

/// A field together with the time it was taken at.
struct FieldSnapshot {
  double time = 0.0;
  GridField field;
};

/// One-dimensional marginal of a 2D field along `axis` (0 keeps x1, 1 keeps x2).
/// For a 1D field the field itself is returned.
[[nodiscard]] GridField marginal(const GridField& field, int axis);

}  // namespace swarmkin

#endif  // SWARMKIN_GRID_HPP
