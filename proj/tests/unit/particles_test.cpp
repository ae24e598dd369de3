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
#include "swarmkin/parallel.hpp"
#include "swarmkin/particles.hpp"

namespace swarmkin {
namespace {

ModelParams params(double lambda, double sigma2, double delta = 0.5) {
  ModelParams p;
  p.lambda = lambda;
  p.mu = 1.0 - lambda;
  p.sigma2 = sigma2;
  p.delta = delta;
  return p;
}

ParticleEnsemble at(std::vector<Point> positions, int dim = 1) {
  ParticleEnsemble e;
  e.dim = dim;
  e.positions = std::move(positions);
  return e;
}

const std::vector<MixtureComponent> kTwoBumps{{0.75, {-2.0, 0.0}, 0.1}, {0.25, {2.0, 0.0}, 0.1}};

TEST(EulerMaruyama, DeterministicRelaxation) {
  auto e = at({{3.0, 0.0}});
  em_step_discontinuous(e, params(1.0, 1.0), UniformKernel{}, 0.1, Noise::off);
  EXPECT_DOUBLE_EQ(e.positions[0].x, 3.0 - 3.0 * 0.1);
  EXPECT_EQ(e.step, 1u);
  EXPECT_DOUBLE_EQ(e.time, 0.1);
}

TEST(EulerMaruyama, FrozenInsideTarget) {
  auto e = at({{0.2, 0.0}, {4.0, 0.0}});
  em_step_discontinuous(e, params(0.5, 1.0), UniformKernel{}, 0.1, Noise::off);
  EXPECT_EQ(e.positions[0].x, 0.2);
  EXPECT_NE(e.positions[1].x, 4.0);
}

TEST(EulerMaruyama, InteractionKeepsMidpoint) {
  for (const InteractionKernel k : {InteractionKernel{UniformKernel{}}, InteractionKernel{CuckerSmaleKernel{1.0}}}) {
    auto e = at({{1.0, 2.0}, {-3.0, 0.5}}, 2);
    em_step_discontinuous(e, params(0.0, 1.0), k, 0.05, Noise::off);
    EXPECT_NEAR(0.5 * (e.positions[0].x + e.positions[1].x), -1.0, 1e-15);
    EXPECT_NEAR(0.5 * (e.positions[0].y + e.positions[1].y), 1.25, 1e-15);
  }
}

TEST(EulerMaruyama, SurrogateFixedPoint) {
  auto p = params(1.0, 1.0);
  p.x0 = {0.7, 0.0};
  auto e = at({{0.7, 0.0}});
  em_step_surrogate(e, p, 0.1, Noise::off);
  EXPECT_EQ(e.positions[0].x, 0.7);
}

TEST(EulerMaruyama, SurrogateNoiseAmplitude) {
  const auto p = params(0.5, 0.2);
  EXPECT_DOUBLE_EQ(surrogate_noise_amplitude(p, {0.0, 0.0}, {0.0, 0.0}), std::sqrt(2.0 * (0.2 + 0.125)));
  EXPECT_DOUBLE_EQ(surrogate_noise_amplitude(p, {3.0, 0.0}, {0.0, 0.0}), std::sqrt(0.4));
}

TEST(InitialMixture, MeanOfTwoBumps) {
  constexpr std::size_t n = 100000;
  const auto e = sample_initial_mixture(kTwoBumps, 1, n, 3);
  const double var = 0.1 + 0.75 * 1.0 + 0.25 * 9.0 - 1.0;  // mixture variance
  EXPECT_NEAR(e.mean().x, -1.0, 3.0 * std::sqrt(var / n));
  EXPECT_EQ(e.size(), n);
}

TEST(InitialMixture, SingleComponentVariance) {
  constexpr std::size_t n = 100000;
  const std::vector<MixtureComponent> one{{1.0, {0.0, 0.0}, 0.3}};
  const auto e = sample_initial_mixture(one, 2, n, 9);
  const auto s = e.stddev();
  EXPECT_NEAR(s.x * s.x, 0.3, 3.0 * 0.3 * std::sqrt(2.0 / n));
  EXPECT_NEAR(s.y * s.y, 0.3, 3.0 * 0.3 * std::sqrt(2.0 / n));
}

TEST(InitialMixture, SameSeedSameEnsemble) {
  const auto a = sample_initial_mixture(kTwoBumps, 1, 1000, 5);
  const auto b = sample_initial_mixture(kTwoBumps, 1, 1000, 5);
  const auto c = sample_initial_mixture(kTwoBumps, 1, 1000, 6);
  EXPECT_EQ(a.positions, b.positions);
  EXPECT_NE(a.positions, c.positions);
}

TEST(InitialMixture, WeightsMustSumToOne) {
  const std::vector<MixtureComponent> bad{{0.5, {}, 1.0}, {0.4, {}, 1.0}};
  EXPECT_THROW((void)sample_initial_mixture(bad, 1, 10, 1), ConfigError);
  const std::vector<MixtureComponent> negative{{1.5, {}, 1.0}, {-0.5, {}, 1.0}};
  EXPECT_THROW((void)sample_initial_mixture(negative, 1, 10, 1), ConfigError);
}

TEST(Run, CountConservedAndRecorded) {
  SdeConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 0.5;
  cfg.record_every = 10;
  cfg.snapshot_times = {0.0, 0.25};
  const auto r = run(sample_initial_mixture(kTwoBumps, 1, 500, 1), params(0.2, 0.08), cfg);
  EXPECT_EQ(r.final_state.size(), 500u);
  EXPECT_EQ(r.final_state.step, 50u);
  EXPECT_NEAR(r.final_state.time, 0.5, 1e-12);
  ASSERT_EQ(r.record.size(), 6u);
  for (double m : r.record.mass) EXPECT_EQ(m, 1.0);
  ASSERT_EQ(r.snapshots.size(), 2u);
  EXPECT_NEAR(r.snapshots[1].time, 0.25, 1e-12);
}

TEST(Run, IndependentOfThreadCount) {
  SdeConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 0.2;
  cfg.kernel = CuckerSmaleKernel{1.0};
  const auto start = sample_initial_mixture(kTwoBumps, 1, 2000, 4);
  const int before = thread_count();
  set_thread_count(1);
  const auto one = run(start, params(0.2, 0.08), cfg);
  set_thread_count(4);
  const auto four = run(start, params(0.2, 0.08), cfg);
  set_thread_count(before);
  EXPECT_EQ(one.final_state.positions, four.final_state.positions);
}

TEST(Run, RejectsBadStep) {
  SdeConfig cfg;
  cfg.dt = 0.0;
  EXPECT_THROW((void)run(at({{0.0, 0.0}}), params(0.2, 0.1), cfg), ConfigError);
}

TEST(StepCount, RoundsNearIntegers) {
  EXPECT_EQ(step_count(20.0, 0.01), 2000u);
  EXPECT_EQ(step_count(0.3, 0.1), 3u);
  EXPECT_EQ(step_count(1.0, 0.3), 4u);
}

TEST(Histogram, UnitMassOnNodes) {
  const auto axis = GridAxis::from_bounds(-5.0, 5.0, 101);
  const auto e = sample_initial_mixture(kTwoBumps, 1, 10000, 2);
  const auto h = histogram(e, HistogramSpec::centered_on(axis));
  EXPECT_EQ(h.overflow, 0u);
  EXPECT_EQ(h.recorded, 10000u);
  EXPECT_NEAR(h.density.mass(), 1.0, 1e-12);
  EXPECT_NEAR(h.density.axis().lo, -5.0, 1e-12);
  EXPECT_NEAR(h.density.dx(), 0.1, 1e-12);
}

TEST(Histogram, OverflowAndUpperEdge) {
  const HistogramSpec layout{0.0, 1.0, 4};
  const std::vector<Point> pts{{1.0, 0.0}, {2.0, 0.0}, {0.1, 0.0}};
  const auto h = histogram(pts, 1, layout);
  EXPECT_EQ(h.overflow, 1u);
  EXPECT_EQ(h.recorded, 2u);
  EXPECT_DOUBLE_EQ(h.density[3], 1.0 / (3.0 * 0.25));
}

}  // namespace
}  // namespace swarmkin
