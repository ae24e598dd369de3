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

#ifndef SWARMKIN_APP_EXPERIMENT_HPP
#define SWARMKIN_APP_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <utility>

#include "swarmkin/app/config.hpp"
#include "swarmkin/app/manifest.hpp"

namespace swarmkin::app {

/// Version string stamped into run metadata.
[[nodiscard]] const char* version();

struct RunOptions {
  /// Overrides entropy.fit_window.
  std::optional<std::pair<double, double>> fit_window;
  /// Leave the timestamp out of run.yaml so that reruns are byte-identical.
  bool omit_timestamp = false;
};

/// Runs the configured experiment and writes its artifacts under
/// config.output, creating the directory when needed. Progress and summary
/// lines go to `log`. Library errors propagate.
Manifest run_experiment(const ExperimentConfig& config, std::ostream& log, const RunOptions& options = {});

}  // namespace swarmkin::app

#endif  // SWARMKIN_APP_EXPERIMENT_HPP
