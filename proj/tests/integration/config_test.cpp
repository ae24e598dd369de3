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

#include <filesystem>
#include <string>

#include "swarmkin/app/config.hpp"
#include "swarmkin/equilibrium.hpp"

namespace swarmkin::app {
namespace {

const char* const kMinimal = R"(
kind: fp
model: {lambda: 0.2, sigma2: 0.3, delta: 1}
initial: f0_test21
grid: {lo: -5, hi: 5, nx: 81}
fp: {equations: [surrogate], t_end: 1}
)";

std::vector<std::string> errors_of(const std::string& text) {
  try {
    (void)parse_config(text, "test.yaml");
  } catch (const ConfigErrors& e) {
    return e.errors();
  }
  return {};
}

bool any_contains(const std::vector<std::string>& errors, const std::string& needle) {
  for (const auto& e : errors) {
    if (e.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(Config, MinimalDefaults) {
  const auto c = parse_config(kMinimal);
  EXPECT_EQ(c.kind, ExperimentKind::fp);
  EXPECT_DOUBLE_EQ(c.model.mu, 0.8);
  EXPECT_EQ(c.initial.components.size(), 2u);
  EXPECT_EQ(c.grid.nx, 81u);
  EXPECT_TRUE(is_uniform(c.kernel));
}

TEST(Config, EveryPresetLoadsAndRoundTrips) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SWARMKIN_PRESETS)) {
    if (entry.path().extension() != ".yaml") continue;
    SCOPED_TRACE(entry.path().string());
    const auto config = load_config(entry.path().string());
    const auto text = write_config(config);
    EXPECT_EQ(parse_config(text, "round trip"), config) << text;
    ++count;
  }
  EXPECT_GE(count, 12);
}

TEST(Config, RoundTripKeepsExplicitMixtureAndWindow) {
  const auto c = parse_config(R"(
kind: entropy
seed: 18446744073709551615
model: {dim: 2, lambda: 0.35, sigma2: 0.123456789012345, delta: 0.75, x0: [0.1, -0.2]}
kernel: {type: cucker_smale, gamma: 0.6}
initial:
  components:
    - {weight: 0.3, mean: [1, 2], variance: 0.2}
    - {weight: 0.7, mean: [-1, 0.5], variance: 0.1}
grid: {lo: -4, hi: 4, nx: 41}
fp: {equations: [nonlocal, discontinuous], t_end: 2, snapshot_times: [0.5, 1.5]}
entropy: {lambdas: [0.35], reference: solution, reference_nx: 161, fit_window: [1, 2]}
)");
  EXPECT_EQ(c.seed, 18446744073709551615ull);
  EXPECT_EQ(parse_config(write_config(c)), c);
}

TEST(Config, InnerMassDeterminesSigma2) {
  const auto c = parse_config(R"(
kind: equilibrium
model: {lambda: 0.2, inner_mass: 0.8, delta: 0.5}
)");
  EXPECT_NEAR(c.model.sigma2, solve_constants_1d(0.8, 0.5).sigma2, 1e-15);
  const auto d = parse_config(R"(
kind: equilibrium
model: {dim: 2, x0: [0, 0], lambda: 0.2, inner_mass: 0.8, delta: 1}
)");
  EXPECT_DOUBLE_EQ(d.model.sigma2, 0.125);
  EXPECT_TRUE(any_contains(errors_of(R"(
kind: equilibrium
model: {lambda: 0.2, inner_mass: 0.8, sigma2: 0.1, delta: 0.5}
)"),
                           "not both"));
}

TEST(Config, LambdaPlusMuNotOne) {
  const auto errors = errors_of(R"(
kind: equilibrium
model: {lambda: 0.2, mu: 0.5, sigma2: 0.3, delta: 1}
)");
  EXPECT_TRUE(any_contains(errors, "model.mu: lambda + mu must equal 1")) << errors.size();
}

TEST(Config, UnknownKernelListsValidNames) {
  const auto errors = errors_of(R"(
kind: equilibrium
model: {lambda: 0.2, sigma2: 0.3, delta: 1}
kernel: {type: vicsek}
)");
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("vicsek"), std::string::npos);
  EXPECT_NE(errors[0].find("uniform, cucker_smale"), std::string::npos);
}

TEST(Config, UnknownKeyNamesPathAndLine) {
  const auto errors = errors_of("kind: equilibrium\nmodel:\n  lambda: 0.2\n  sigma2: 0.3\n  delta: 1\n  lamda: 0.3\n");
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("model.lamda"), std::string::npos);
  EXPECT_NE(errors[0].find("line 6"), std::string::npos);
}

TEST(Config, ParseErrorHasLine) {
  const auto errors = errors_of("kind: fp\nmodel: {lambda: 0.2\ngrid: [\n");
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("line"), std::string::npos);
}

TEST(Config, CollectsAllErrors) {
  const auto errors = errors_of(R"(
kind: particles
model: {lambda: 1.5, sigma2: -1, delta: 1}
initial: {preset: nowhere}
grid: {lo: 1, hi: -1, nx: 1}
particles: {n: 0, dt: 0, models: [ballistic]}
)");
  EXPECT_GE(errors.size(), 6u);
  EXPECT_TRUE(any_contains(errors, "model.lambda"));
  EXPECT_TRUE(any_contains(errors, "model.sigma2"));
  EXPECT_TRUE(any_contains(errors, "nowhere"));
  EXPECT_TRUE(any_contains(errors, "ballistic"));
  EXPECT_TRUE(any_contains(errors, "particles.n"));
}

TEST(Config, WrongTypeIsReported) {
  EXPECT_TRUE(any_contains(errors_of("kind: equilibrium\nmodel: {lambda: fast, sigma2: 1, delta: 1}\n"),
                           "model.lambda: expected a number"));
}

TEST(Config, PresetDimensionMustMatch) {
  EXPECT_TRUE(any_contains(errors_of(R"(
kind: fp
model: {dim: 2, lambda: 0.2, sigma2: 0.3, delta: 1, x0: [0, 0]}
initial: f0_test1
)"),
                           "preset dimension"));
}

TEST(Config, UnstableStepIsRejectedBeforeRunning) {
  EXPECT_TRUE(any_contains(errors_of(R"(
kind: fp
model: {lambda: 0.2, sigma2: 0.3, delta: 1}
initial: f0_test21
grid: {lo: -5, hi: 5, nx: 81}
fp: {equations: [surrogate], dt: 0.1}
)"),
                           "fp.dt"));
}

TEST(Config, SurrogateNeedsUniformKernel) {
  EXPECT_TRUE(any_contains(errors_of(R"(
kind: compare
model: {lambda: 0.2, sigma2: 0.3, delta: 1}
kernel: cucker_smale
initial: f0_test1
particles: {models: [surrogate]}
)"),
                           "uniform kernel"));
}

TEST(Config, MissingFile) {
  EXPECT_THROW((void)load_config("/nonexistent/config.yaml"), ConfigErrors);
}

}  // namespace
}  // namespace swarmkin::app
