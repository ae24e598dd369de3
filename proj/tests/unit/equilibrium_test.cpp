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

#include "swarmkin/equilibrium.hpp"
#include "swarmkin/error.hpp"

namespace swarmkin {
namespace {

// 50-digit values from tests/oracles/equilibrium_oracle.py.
constexpr double kSigma2Line = 0.076153480198375952838;   // m2 = 0.8, delta = 0.5
constexpr double kM1Line = 2.8568361228052344803;
constexpr double kSigma2Unit = 0.30461392079350381135;    // m2 = 0.8, delta = 1
constexpr double kM1Plane = 10.919630006628847816;        // m2 = 0.8, delta = 1, d = 2

TEST(SolveConstants1d, MatchesOracle) {
  const auto c = solve_constants_1d(0.8, 0.5);
  EXPECT_NEAR(c.sigma2, kSigma2Line, 1e-11);
  EXPECT_NEAR(c.m1, kM1Line, 1e-9);
  const auto r = system1_residuals(c.m1, c.sigma2, 0.8, 0.5);
  EXPECT_LE(std::abs(r[0]), 1e-10);
  EXPECT_LE(std::abs(r[1]), 1e-10);
}

TEST(SolveConstants1d, ScalesWithDeltaSquared) {
  EXPECT_NEAR(solve_constants_1d(0.8, 1.0).sigma2, kSigma2Unit, 1e-10);
  EXPECT_NEAR(solve_constants_1d(0.8, 1.0).m1, kM1Line, 1e-9);
}

TEST(SolveConstants1d, OracleScan) {
  const double m2[] = {0.5, 0.6, 0.7, 0.9};
  const double sigma2[] = {0.44232873960804809, 0.25551433528428653, 0.14542467022460715, 0.030631895089966762};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(solve_constants_1d(m2[k], 0.5).sigma2, sigma2[k], 1e-11) << m2[k];
}

TEST(SolveConstants1d, RejectsInnerMassOutsideUnitInterval) {
  EXPECT_THROW((void)solve_constants_1d(1.0, 0.5), DomainError);
  EXPECT_THROW((void)solve_constants_1d(0.0, 0.5), DomainError);
  EXPECT_THROW((void)solve_constants_1d(0.5, -1.0), DomainError);
}

TEST(SolveConstants2d, ClosedForm) {
  const auto c = solve_constants_2d(0.8, 1.0);
  EXPECT_NEAR(c.sigma2, 0.125, 1e-15);
  EXPECT_NEAR(c.m1, kM1Plane, 1e-6);
  const auto r = system2_residuals(c.m1, c.sigma2, 0.8, 1.0);
  EXPECT_LE(std::abs(r[0]), 1e-10);
  EXPECT_LE(std::abs(r[1]), 1e-10);
  EXPECT_NEAR(solve_constants_2d(0.5, 1.0).m1, 1.3591409142295226177, 1e-12);
}

TEST(SolveMass, InvertsSolveConstants) {
  const auto m = solve_mass_1d(kSigma2Line, 0.5);
  EXPECT_NEAR(m.m2, 0.8, 1e-10);
  EXPECT_NEAR(m.m1, kM1Line, 1e-8);
  const auto q = solve_mass_2d(0.125, 1.0);
  EXPECT_NEAR(q.m2, 0.8, 1e-12);
}

TEST(Profile, MassIsOneOnAFineGrid) {
  const auto p = EquilibriumProfile::from_inner_mass(0.8, 0.5, 1);
  const auto f = discretize_f_infty(p, GridAxis::from_bounds(-8.0, 8.0, 16001));
  EXPECT_NEAR(f.mass(), 1.0, 2e-4);
  const auto q = EquilibriumProfile::from_inner_mass(0.8, 1.0, 2);
  const auto g = discretize_f_infty(q, GridAxis::from_bounds(-6.0, 6.0, 1201));
  EXPECT_NEAR(g.mass(), 1.0, 5e-3);
}

TEST(Profile, ContinuousAtTheTargetRadius) {
  const auto p = EquilibriumProfile::from_inner_mass(0.8, 0.5, 1);
  EXPECT_NEAR(f_infty_eval(p, {0.5 - 1e-12, 0.0}), f_infty_eval(p, {0.5 + 1e-12, 0.0}), 1e-9);
  EXPECT_NEAR(f_infty_eval(p, {0.0, 0.0}), 0.8, 1e-12);
}

TEST(Profile, QuasiStationaryIsAShift) {
  const auto p = EquilibriumProfile::from_inner_mass(0.8, 0.5, 1);
  EXPECT_EQ(f_q_eval(p, {1.0, 0.0}, {1.7, 0.0}), f_infty_eval(p, {0.7, 0.0}));
}

TEST(Erfcx, LargeArgument) {
  EXPECT_NEAR(erfcx(0.0), 1.0, 1e-15);
  EXPECT_NEAR(erfcx(30.0) * 30.0 * std::sqrt(M_PI), 1.0, 1e-3);
  EXPECT_NEAR(erfcx(1.0), std::exp(1.0) * std::erfc(1.0), 1e-14);
}

}  // namespace
}  // namespace swarmkin
