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

#ifndef SWARMKIN_NONLOCAL_DRIFT_HPP
#define SWARMKIN_NONLOCAL_DRIFT_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "swarmkin/grid.hpp"
#include "swarmkin/model.hpp"
#include "swarmkin/point.hpp"

namespace swarmkin {

/// Values living on the cell interfaces of a GridField, one array per axis.
///
/// Axis 0 interface (i + 1/2, j) is stored at j * (nx - 1) + i; axis 1
/// interface (i, j + 1/2) at j * nx + i.
class InterfaceField {
 public:
  InterfaceField() = default;
  InterfaceField(GridAxis axis, int dim);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const GridAxis& axis() const noexcept { return axis_; }
  [[nodiscard]] std::size_t size(int along) const noexcept { return values_[along].size(); }
  [[nodiscard]] std::span<double> values(int along) noexcept { return values_[along]; }
  [[nodiscard]] std::span<const double> values(int along) const noexcept { return values_[along]; }

  /// Position of interface k of the given axis.
  [[nodiscard]] Point location(int along, std::size_t k) const noexcept;
  /// Flat node indices on the lower and upper side of interface k.
  [[nodiscard]] std::array<std::size_t, 2> neighbors(int along, std::size_t k) const noexcept;

 private:
  GridAxis axis_{};
  int dim_ = 1;
  std::array<std::vector<double>, 2> values_;
};

/// How the interaction integral is evaluated on the grid.
enum class DriftRoute {
  automatic,    ///< closed form for the uniform kernel, FFT otherwise
  closed_form,  ///< x * mass - first moment; uniform kernel only
  direct,       ///< O(n^2d) pairwise sum
  fft,          ///< zero-padded FFT convolution (translation-invariant kernels)
};

/// Evaluates sum_y P(x, y) (x - y)_a f(y) dy^d at the interfaces of a fixed grid.
///
/// Holds FFT plans and scratch buffers, so one instance must not be shared
/// between threads. Both routes produce the same numbers up to rounding.
class NonlocalDrift {
 public:
  NonlocalDrift(GridAxis axis, int dim, InteractionKernel kernel, DriftRoute route = DriftRoute::automatic);
  ~NonlocalDrift();
  NonlocalDrift(NonlocalDrift&&) noexcept;
  NonlocalDrift& operator=(NonlocalDrift&&) noexcept;

  /// Interaction term along `along` for every interface of that axis.
  void interaction(const GridField& density, int along, std::span<double> out);

  /// Effective route after resolving `automatic`.
  [[nodiscard]] DriftRoute route() const noexcept { return route_; }
  [[nodiscard]] const InteractionKernel& kernel() const noexcept { return kernel_; }

 private:
  struct Fft;

  void uniform(const GridField& density, int along, std::span<double> out) const;
  void direct(const GridField& density, int along, std::span<double> out) const;

  GridAxis axis_;
  int dim_;
  InteractionKernel kernel_;
  DriftRoute route_;
  std::unique_ptr<Fft> fft_;
};

/// Full drift lambda (x - x0) + mu * interaction at every interface (axis
/// component only). Throws DomainError on a zero-mass field.
[[nodiscard]] InterfaceField nonlocal_drift_on_grid(const GridField& density, const InteractionKernel& kernel,
                                                    const ModelParams& params,
                                                    DriftRoute route = DriftRoute::automatic);

}  // namespace swarmkin

#endif  // SWARMKIN_NONLOCAL_DRIFT_HPP
