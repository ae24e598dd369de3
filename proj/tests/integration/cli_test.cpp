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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  auto dir = fs::temp_directory_path() / ("swarmkin_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Exit status of `swarmkin <args>`, with stdout and stderr captured in `log`.
int swarmkin(const std::string& args, const fs::path& log, const std::string& env = "") {
  const std::string cmd = env + " " + SWARMKIN_CLI + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kPresets = SWARMKIN_PRESETS;

TEST(Cli, EquilibriumPreset) {
  const auto dir = scratch_dir();
  ASSERT_EQ(swarmkin("equilibrium --config " + kPresets + "/equilibrium.yaml --out " + (dir / "eq").string(),
                     dir / "log.txt"),
            0)
      << slurp(dir / "log.txt");
  const auto log = slurp(dir / "log.txt");
  EXPECT_NE(log.find("m1: 2.8568361228"), std::string::npos) << log;
  EXPECT_NE(log.find("sigma2: 0.07615348"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "eq" / "steady_state.csv"));
  EXPECT_TRUE(fs::exists(dir / "eq" / "manifest.txt"));
}

TEST(Cli, SeedAndThreadsAreApplied) {
  const auto dir = scratch_dir();
  std::ofstream(dir / "p.yaml") << "model: {lambda: 0.2, sigma2: 0.2, delta: 0.5}\n"
                                   "initial: f0_test1\n"
                                   "particles: {n: 500, dt: 0.01, t_end: 0.1}\n";
  ASSERT_EQ(swarmkin("particles -c " + (dir / "p.yaml").string() + " --seed 99 -o " + (dir / "out").string(),
                     dir / "log.txt", "SWARMKIN_THREADS=2"),
            0)
      << slurp(dir / "log.txt");
  EXPECT_NE(slurp(dir / "log.txt").find("2 thread(s)"), std::string::npos);
  EXPECT_NE(slurp(dir / "out" / "run.yaml").find("seed: 99\n"), std::string::npos);
  EXPECT_NE(slurp(dir / "out" / "run.yaml").find("kind: particles\n"), std::string::npos);
}

TEST(Cli, RerunFromMetadataIsIdentical) {
  const auto dir = scratch_dir();
  std::ofstream(dir / "p.yaml") << "model: {lambda: 0.2, sigma2: 0.2, delta: 0.5}\n"
                                   "initial: f0_test1\n"
                                   "particles: {n: 500, dt: 0.01, t_end: 0.2, snapshot_times: [0.2]}\n";
  ASSERT_EQ(swarmkin("particles -c " + (dir / "p.yaml").string() + " -o " + (dir / "a").string(), dir / "log.txt"), 0);
  ASSERT_EQ(swarmkin("particles -c " + (dir / "a" / "run.yaml").string() + " -o " + (dir / "b").string(),
                     dir / "log.txt"),
            0);
  for (const char* f : {"particles_discontinuous_t0.2.csv", "particles_discontinuous_trajectory.csv"}) {
    EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f)) << f;
  }
}

TEST(Cli, InvalidConfigExitsWithListedErrors) {
  const auto dir = scratch_dir();
  std::ofstream(dir / "bad.yaml") << "model: {lambda: 0.2, mu: 0.3, sigma2: 0.2, delta: 0.5}\n"
                                     "kernel: {type: flocking}\n";
  EXPECT_EQ(swarmkin("fp -c " + (dir / "bad.yaml").string(), dir / "log.txt"), 2);
  const auto log = slurp(dir / "log.txt");
  EXPECT_NE(log.find("model.mu"), std::string::npos) << log;
  EXPECT_NE(log.find("uniform, cucker_smale"), std::string::npos) << log;
}

TEST(Cli, UsageErrors) {
  const auto dir = scratch_dir();
  EXPECT_NE(swarmkin("", dir / "log.txt"), 0);
  EXPECT_NE(swarmkin("fp", dir / "log.txt"), 0);
  EXPECT_NE(swarmkin("fp --config /nonexistent.yaml", dir / "log.txt"), 0);
  EXPECT_EQ(swarmkin("--help", dir / "log.txt"), 0);
}

}  // namespace
