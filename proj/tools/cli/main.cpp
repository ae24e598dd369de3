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

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "swarmkin/app/config.hpp"
#include "swarmkin/app/experiment.hpp"
#include "swarmkin/error.hpp"
#include "swarmkin/parallel.hpp"

namespace {

struct Arguments {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::vector<double> fit_window;
  bool no_timestamp = false;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace swarmkin::app;
  CLI::App app{"Swarm coverage dynamics: particle systems, grid solvers and diagnostics"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.footer(std::string("Thread count: set ") + swarmkin::kThreadsEnvVar + "=N.");

  Arguments args;
  for (const char* kind : {"equilibrium", "particles", "fp", "compare", "entropy"}) {
    auto* sub = app.add_subcommand(kind, std::string("run a ") + kind + " experiment");
    sub->add_option("--config,-c", args.config, "YAML configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", args.seed, "override the configured seed");
    sub->add_option("--out,-o", args.out, "override the output directory");
    sub->add_flag("--no-timestamp", args.no_timestamp, "leave the timestamp out of run.yaml");
    if (std::string(kind) == "entropy") {
      sub->add_option("--fit-window", args.fit_window, "decay fit window T0 T1 (default: second half)")
          ->expected(2);
    }
  }
  CLI11_PARSE(app, argc, argv);

  const std::string kind_name = app.get_subcommands().front()->get_name();
  const int threads = swarmkin::configure_threads_from_env();
  try {
    ExperimentConfig config = load_config(args.config);
    config.kind = *parse_kind(kind_name);
    if (args.seed) config.seed = *args.seed;
    if (args.out) config.output = *args.out;
    RunOptions options;
    options.omit_timestamp = args.no_timestamp;
    if (args.fit_window.size() == 2) options.fit_window = std::make_pair(args.fit_window[0], args.fit_window[1]);
    std::clog << "swarmkin " << version() << ": " << kind_name << " with " << threads << " thread(s)\n";
    run_experiment(config, std::cout, options);
  } catch (const ConfigErrors& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const swarmkin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
