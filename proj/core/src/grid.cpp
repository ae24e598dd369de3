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

#include "swarmkin/grid.hpp"

#include <cmath>

#include "swarmkin/error.hpp"

namespace swarmkin {

GridAxis GridAxis::from_bounds(double lo, double hi, std::size_t n) {
  if (!(hi > lo)) throw ConfigError("grid: lo must be smaller than hi");
  if (n < 2) throw ConfigError("grid: at least two nodes per axis are required");
  return GridAxis{lo, (hi - lo) / static_cast<double>(n - 1), n};
}

GridField::GridField(GridAxis axis, int dim) : axis_(axis), dim_(dim) {
  if (dim != 1 && dim != 2) throw ConfigError("grid: dimension must be 1 or 2");
  if (axis.n == 0 || !(axis.dx > 0.0)) throw ConfigError("grid: empty axis");
  values_.assign(dim == 1 ? axis.n : axis.n * axis.n, 0.0);
}

GridField GridField::sample(GridAxis axis, int dim, const std::function<double(Point)>& density) {
  GridField field(axis, dim);
  for (std::size_t k = 0; k < field.size(); ++k) field.values_[k] = density(field.node(k));
  return field;
}

Point GridField::node(std::size_t k) const noexcept {
  if (dim_ == 1) return {axis_.node(k), 0.0};
  return {axis_.node(k % axis_.n), axis_.node(k / axis_.n)};
}

double GridField::mass() const noexcept {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum * cell_volume();
}

Point GridField::first_moment() const noexcept {
  Point sum{};
  for (std::size_t k = 0; k < values_.size(); ++k) sum += values_[k] * node(k);
  return sum * cell_volume();
}

Point GridField::mean() const {
  const double m = mass();
  if (!(m > 0.0)) throw DomainError("grid field has zero mass");
  return first_moment() * (1.0 / m);
}

double GridField::energy() const {
  const double m = mass();
  if (!(m > 0.0)) throw DomainError("grid field has zero mass");
  double sum = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) sum += 0.5 * norm2(node(k)) * values_[k];
  return sum * cell_volume() / m;
}

bool GridField::same_grid(const GridField& other) const noexcept {
  const GridAxis& a = axis_;
  const GridAxis& b = other.axis_;
  const double tol = 1e-9 * a.dx;
  return dim_ == other.dim_ && a.n == b.n && std::abs(a.lo - b.lo) <= tol && std::abs(a.dx - b.dx) <= tol / static_cast<double>(a.n);
}

void GridField::normalize() {
  const double m = mass();
  if (!(m > 0.0)) throw DomainError("cannot normalize a zero-mass field");
  for (double& v : values_) v /= m;
}

GridField marginal(const GridField& field, int axis) {
  if (field.dim() == 1) return field;
  GridField out(field.axis(), 1);
  const std::size_t n = field.nx();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out[axis == 0 ? i : j] += field.at(i, j) * field.dx();
    }
  }
  return out;
}

}  // namespace swarmkin
