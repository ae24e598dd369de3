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

// Per-step costs of the particle integrator, the grid solver and the two
// interaction routes.

#include <benchmark/benchmark.h>

#include <vector>

#include "swarmkin/fp_solver.hpp"
#include "swarmkin/nonlocal_drift.hpp"
#include "swarmkin/particles.hpp"

namespace {

using namespace swarmkin;

const std::vector<MixtureComponent> kTwoBumps{{0.75, {-2.0, 0.0}, 0.1}, {0.25, {2.0, 0.0}, 0.1}};

ModelParams params(int dim) {
  ModelParams p;
  p.lambda = 0.2;
  p.mu = 0.8;
  p.sigma2 = 0.2;
  p.delta = 0.5;
  p.dim = dim;
  return p;
}

void ParticleStepDiscontinuous(benchmark::State& state) {
  auto ens = sample_initial_mixture(kTwoBumps, 1, static_cast<std::size_t>(state.range(0)), 1);
  const auto p = params(1);
  for (auto _ : state) {
    em_step_discontinuous(ens, p, UniformKernel{}, 1e-3);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(ParticleStepDiscontinuous)->Arg(10000)->Arg(100000);

void ParticleStepCuckerSmale(benchmark::State& state) {
  auto ens = sample_initial_mixture(kTwoBumps, 1, static_cast<std::size_t>(state.range(0)), 1);
  const auto p = params(1);
  for (auto _ : state) {
    em_step_discontinuous(ens, p, CuckerSmaleKernel{1.0}, 1e-3);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(ParticleStepCuckerSmale)->Arg(1000)->Arg(4000);

void GridRk4Step(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(1));
  const auto axis = GridAxis::from_bounds(-5.0, 5.0, static_cast<std::size_t>(state.range(0)));
  auto f = discretize_mixture(kTwoBumps, axis, dim);
  FpOperator op(axis, dim, Equation::discontinuous, params(dim), CuckerSmaleKernel{1.0});
  for (auto _ : state) {
    op.rk4_step(f, 1e-4);
    benchmark::DoNotOptimize(f[0]);
  }
}
BENCHMARK(GridRk4Step)->Args({201, 1})->Args({801, 1})->Args({81, 2});

void InteractionRoute(benchmark::State& state, DriftRoute route) {
  const int dim = static_cast<int>(state.range(1));
  const auto axis = GridAxis::from_bounds(-5.0, 5.0, static_cast<std::size_t>(state.range(0)));
  const auto f = discretize_mixture(kTwoBumps, axis, dim);
  NonlocalDrift drift(axis, dim, CuckerSmaleKernel{1.0}, route);
  InterfaceField out(axis, dim);
  for (auto _ : state) {
    drift.interaction(f, 0, out.values(0));
    benchmark::DoNotOptimize(out.values(0).data());
  }
}
BENCHMARK_CAPTURE(InteractionRoute, direct, DriftRoute::direct)->Args({201, 1})->Args({801, 1})->Args({41, 2});
BENCHMARK_CAPTURE(InteractionRoute, fft, DriftRoute::fft)->Args({201, 1})->Args({801, 1})->Args({41, 2})->Args({81, 2});

}  // namespace

BENCHMARK_MAIN();
