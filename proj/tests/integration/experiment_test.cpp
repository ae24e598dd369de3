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
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "swarmkin/app/config.hpp"
#include "swarmkin/app/csv.hpp"
#include "swarmkin/app/experiment.hpp"
#include "swarmkin/app/manifest.hpp"

namespace swarmkin::app {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  auto dir = fs::temp_directory_path() /
             ("swarmkin_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

std::size_t line_count(const fs::path& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

ExperimentConfig small_compare(const fs::path& out) {
  auto c = parse_config(R"(
kind: compare
seed: 7
model: {lambda: 0.2, inner_mass: 0.8, delta: 0.5}
initial: f0_test1
grid: {lo: -5, hi: 5, nx: 51}
particles: {n: 3000, dt: 0.01, t_end: 1, models: [discontinuous, surrogate], snapshot_times: [0, 0.5, 1]}
fp: {record_every: 50}
)");
  c.output = out.string();
  return c;
}

TEST(Csv, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(0.01), "0.01");
  EXPECT_EQ(format_double(20.0), "20");
}

TEST(Csv, RowWidthChecked) {
  const auto dir = scratch_dir();
  fs::create_directories(dir);
  CsvWriter csv((dir / "x.csv").string(), {"a", "b"});
  EXPECT_THROW(csv.row({1.0}), std::runtime_error);
}

TEST(Experiment, EquilibriumWritesConstantsAndSamples) {
  const auto dir = scratch_dir() / "nested" / "run";
  auto c = parse_config("kind: equilibrium\nmodel: {lambda: 0.2, inner_mass: 0.8, delta: 0.5}\n");
  c.output = dir.string();
  std::ostringstream log;
  const auto manifest = run_experiment(c, log);
  EXPECT_NE(log.str().find("m1: 2.85683612"), std::string::npos) << log.str();
  EXPECT_NE(log.str().find("sigma2: 0.0761534801"), std::string::npos);
  EXPECT_EQ(first_line(dir / "steady_state.csv"), "x1,f");
  EXPECT_EQ(line_count(dir / "steady_state.csv"), 102u);
  for (const char* f : {"run.yaml", "manifest.txt", "plot.py", "equilibrium.txt"}) EXPECT_TRUE(fs::exists(dir / f)) << f;
  EXPECT_EQ(manifest.files.size(), 5u);
}

TEST(Experiment, CompareEmitsHistogramsSolutionsAndDistances) {
  const auto dir = scratch_dir();
  std::ostringstream log;
  (void)run_experiment(small_compare(dir), log);
  EXPECT_EQ(first_line(dir / "compare_l1.csv"), "model,t,l1_pde,l1_steady");
  EXPECT_EQ(line_count(dir / "compare_l1.csv"), 1u + 2u * 3u);
  for (const char* m : {"discontinuous", "surrogate"}) {
    EXPECT_EQ(first_line(dir / ("compare_" + std::string(m) + "_histograms.csv")), "t,x1,f");
    EXPECT_EQ(line_count(dir / ("compare_" + std::string(m) + "_pde.csv")), 1u + 3u * 51u);
  }
  std::ifstream table(dir / "compare_l1.csv");
  std::string line;
  std::getline(table, line);
  while (std::getline(table, line)) {
    const auto l1 = std::stod(line.substr(line.find(',', line.find(',') + 1) + 1));
    EXPECT_LT(l1, 0.3) << line;
  }
}

TEST(Experiment, RerunIsByteIdentical) {
  const auto a = scratch_dir();
  std::ostringstream log;
  RunOptions options;
  options.omit_timestamp = true;
  (void)run_experiment(small_compare(a), log, options);
  const auto first = slurp(a / "compare_l1.csv") + slurp(a / "compare_surrogate_histograms.csv") + slurp(a / "run.yaml");
  (void)run_experiment(small_compare(a), log, options);
  const auto second = slurp(a / "compare_l1.csv") + slurp(a / "compare_surrogate_histograms.csv") + slurp(a / "run.yaml");
  EXPECT_EQ(first, second);
}

TEST(Experiment, RunMetadataReproducesTheConfig) {
  const auto dir = scratch_dir();
  std::ostringstream log;
  const auto config = small_compare(dir);
  (void)run_experiment(config, log);
  const auto meta = load_config((dir / "run.yaml").string());
  EXPECT_EQ(meta, config);
  EXPECT_NE(slurp(dir / "run.yaml").find("# written "), std::string::npos);
}

TEST(Experiment, ParticlesWriteSnapshotsAndTrajectory) {
  const auto dir = scratch_dir();
  auto c = small_compare(dir);
  c.kind = ExperimentKind::particles;
  c.model.dim = 2;
  c.initial.preset = "init2D";
  c.initial.components = *preset_components("init2D");
  c.particles.models = {ParticleModel::discontinuous};
  c.particles.snapshot_times = {1.0};
  std::ostringstream log;
  (void)run_experiment(c, log);
  EXPECT_EQ(first_line(dir / "particles_discontinuous_trajectory.csv"), "t,u1,u2,E");
  EXPECT_EQ(first_line(dir / "particles_discontinuous_t1.csv"), "index,x1,x2");
  EXPECT_EQ(line_count(dir / "particles_discontinuous_t1.csv"), 3001u);
  EXPECT_EQ(first_line(dir / "particles_discontinuous_histograms.csv"), "t,x1,x2,f");
}

TEST(Experiment, FpSeriesColumns) {
  const auto dir = scratch_dir();
  auto c = parse_config(R"(
kind: fp
model: {lambda: 0.5, inner_mass: 0.8, delta: 1}
initial: f0_test21
grid: {lo: -5, hi: 5, nx: 41}
fp: {equations: [surrogate, discontinuous], t_end: 0.5, record_every: 10, integrator: rk4}
)");
  c.output = dir.string();
  std::ostringstream log;
  (void)run_experiment(c, log);
  EXPECT_EQ(first_line(dir / "fp_surrogate_series.csv"), "t,mass,mean1,energy,entropy");
  EXPECT_TRUE(fs::exists(dir / "fp_discontinuous_fields.csv"));
}

TEST(Experiment, EntropyWithSolutionReference) {
  const auto dir = scratch_dir();
  auto c = parse_config(R"(
kind: entropy
model: {lambda: 0.2, inner_mass: 0.8, delta: 1}
kernel: cucker_smale
initial: f0_test21
grid: {lo: -5, hi: 5, nx: 41}
fp: {equations: [discontinuous], t_end: 2}
entropy: {lambdas: [0.2, 0.8], reference: solution, reference_nx: 81, reference_t_end: 6}
)");
  c.output = dir.string();
  std::ostringstream log;
  RunOptions options;
  options.fit_window = std::make_pair(0.5, 2.0);
  (void)run_experiment(c, log, options);
  EXPECT_EQ(first_line(dir / "entropy_discontinuous_lambda0.2.csv"), "t,value");
  EXPECT_EQ(line_count(dir / "entropy_discontinuous_lambda0.2.csv"), 41u);
  const auto report = slurp(dir / "entropy_discontinuous_lambda0.8_fit.txt");
  EXPECT_NE(report.find("window: [0.5, 2]"), std::string::npos) << report;
  EXPECT_NE(report.find("rate: "), std::string::npos);
  EXPECT_EQ(line_count(dir / "entropy_fits.csv"), 3u);
}

TEST(Experiment, InvalidConfigIsRejectedBeforeWriting) {
  const auto dir = scratch_dir();
  auto c = small_compare(dir);
  c.model.mu = 0.1;
  std::ostringstream log;
  EXPECT_THROW((void)run_experiment(c, log), ConfigErrors);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(PlotScript, EmptyManifestIsRejected) {
  EXPECT_THROW((void)emit_plot_script(Manifest{}), std::invalid_argument);
}

TEST(PlotScript, DrawsWhatTheManifestHolds) {
  Manifest m;
  m.files = {{"h.csv", ArtifactKind::decay, "lambda 0.2", 1}};
  EXPECT_NE(emit_plot_script(m).find("semilogy"), std::string::npos);
  EXPECT_NE(emit_plot_script(m).find("decay([\n    (\"h.csv\""), std::string::npos);
  m.files = {{"f.csv", ArtifactKind::density, "grid", 1}, {"s.csv", ArtifactKind::steady_state, "steady", 1}};
  EXPECT_NE(emit_plot_script(m).find("density_1d(\"f.csv\", \"grid\", \"s.csv\")"), std::string::npos);
  m.files = {{"g.csv", ArtifactKind::density, "plane", 2}};
  EXPECT_NE(emit_plot_script(m).find("density_2d(\"g.csv\", \"plane\")"), std::string::npos);
}

TEST(PlotScript, RunsUnderPython) {
  if (std::system("python3 -c 'import matplotlib' > /dev/null 2>&1") != 0) GTEST_SKIP() << "matplotlib unavailable";
  const auto dir = scratch_dir();
  std::ostringstream log;
  (void)run_experiment(small_compare(dir), log);
  const auto cmd = "python3 " + (dir / "plot.py").string() + " > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(dir / "compare_l1.png"));
  EXPECT_TRUE(fs::exists(dir / "compare_surrogate_pde.png"));
}

}  // namespace
}  // namespace swarmkin::app
