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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "swarmkin/error.hpp"
#include "swarmkin/fp_solver.hpp"
#include "swarmkin/nonlocal_drift.hpp"

namespace swarmkin {
namespace {

GridField bumps(const GridAxis& axis, int dim) {
  const std::vector<MixtureComponent> c{{0.6, {-1.5, 0.5}, 0.3}, {0.4, {1.0, -0.8}, 0.5}};
  return discretize_mixture(c, axis, dim);
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

TEST(InterfaceField, Layout) {
  const InterfaceField f(GridAxis::from_bounds(0.0, 3.0, 4), 2);
  EXPECT_EQ(f.size(0), 12u);
  EXPECT_EQ(f.size(1), 12u);
  EXPECT_EQ(f.neighbors(0, 4), (std::array<std::size_t, 2>{5, 6}));
  EXPECT_EQ(f.neighbors(1, 5), (std::array<std::size_t, 2>{5, 9}));
  EXPECT_EQ(f.location(0, 4), (Point{1.5, 1.0}));
  EXPECT_EQ(f.location(1, 5), (Point{1.0, 1.5}));
}

TEST(NonlocalDrift, ClosedFormMatchesDirect) {
  for (int dim : {1, 2}) {
    const auto axis = GridAxis::from_bounds(-4.0, 4.0, dim == 1 ? 101 : 31);
    const auto f = bumps(axis, dim);
    NonlocalDrift closed(axis, dim, UniformKernel{}, DriftRoute::closed_form);
    NonlocalDrift direct(axis, dim, UniformKernel{}, DriftRoute::direct);
    for (int a = 0; a < dim; ++a) {
      const InterfaceField shape(axis, dim);
      std::vector<double> x(shape.size(a)), y(shape.size(a));
      closed.interaction(f, a, x);
      direct.interaction(f, a, y);
      EXPECT_LT(max_abs_diff(x, y), 1e-12) << dim << " " << a;
    }
  }
}

TEST(NonlocalDrift, FftMatchesDirect) {
  for (int dim : {1, 2}) {
    const auto axis = GridAxis::from_bounds(-5.0, 5.0, dim == 1 ? 161 : 41);
    const auto f = bumps(axis, dim);
    for (double gamma : {1.0, 0.6}) {
      NonlocalDrift fft(axis, dim, CuckerSmaleKernel{gamma}, DriftRoute::fft);
      NonlocalDrift direct(axis, dim, CuckerSmaleKernel{gamma}, DriftRoute::direct);
      for (int a = 0; a < dim; ++a) {
        const InterfaceField shape(axis, dim);
        std::vector<double> x(shape.size(a)), y(shape.size(a));
        fft.interaction(f, a, x);
        direct.interaction(f, a, y);
        EXPECT_LT(max_abs_diff(x, y), 1e-12) << dim << " " << gamma << " " << a;
      }
    }
  }
}

TEST(NonlocalDrift, AutomaticRoute) {
  const auto axis = GridAxis::from_bounds(-1.0, 1.0, 11);
  EXPECT_EQ(NonlocalDrift(axis, 1, UniformKernel{}).route(), DriftRoute::closed_form);
  EXPECT_EQ(NonlocalDrift(axis, 1, CuckerSmaleKernel{}).route(), DriftRoute::fft);
  EXPECT_THROW(NonlocalDrift(axis, 1, CuckerSmaleKernel{}, DriftRoute::closed_form), ConfigError);
}

TEST(NonlocalDrift, AgreesWithPointwiseDrift) {
  const auto axis = GridAxis::from_bounds(-3.0, 3.0, 61);
  const auto f = bumps(axis, 1);
  ModelParams p;
  p.lambda = 0.3;
  p.mu = 0.7;
  const InteractionKernel k = CuckerSmaleKernel{1.0};
  const auto b = nonlocal_drift_on_grid(f, k, p, DriftRoute::direct);
  for (std::size_t i : {0u, 17u, 30u, 59u}) {
    EXPECT_NEAR(b.values(0)[i], drift_B(p, k, b.location(0, i), f).x, 1e-12);
  }
}

TEST(NonlocalDrift, ZeroMassThrows) {
  const GridField empty(GridAxis::from_bounds(-1.0, 1.0, 11), 1);
  ModelParams p;
  EXPECT_THROW((void)nonlocal_drift_on_grid(empty, UniformKernel{}, p), DomainError);
}

}  // namespace
}  // namespace swarmkin
