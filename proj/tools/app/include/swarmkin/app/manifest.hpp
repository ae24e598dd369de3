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

#ifndef SWARMKIN_APP_MANIFEST_HPP
#define SWARMKIN_APP_MANIFEST_HPP

#include <string>
#include <vector>

namespace swarmkin::app {

/// What a written file holds; decides how the plot script draws it.
enum class ArtifactKind {
  density,       ///< t,x1[,x2],f rows, one block per time
  steady_state,  ///< x1[,x2],f of the stationary density
  field_series,  ///< t,mass,mean..,energy,entropy
  trajectory,    ///< t,u..,E of a particle run
  particles,     ///< index,x1[,x2] at one time
  decay,         ///< t,value
  distances,     ///< L1 tables
  report,        ///< free text
  metadata,      ///< resolved configuration
  plot_script,
};

struct Artifact {
  std::string path;   ///< relative to the run directory
  ArtifactKind kind;
  std::string label;
  int dim = 1;
};

struct Manifest {
  std::string directory;
  std::vector<Artifact> files;
};

[[nodiscard]] std::string to_string(ArtifactKind kind);

/// Python/matplotlib script that draws density overlays, 2D heatmaps with
/// marginals, and log-scale decay curves from the listed CSVs. The script
/// reads paths relative to its own location. Throws std::invalid_argument on
/// an empty manifest.
[[nodiscard]] std::string emit_plot_script(const Manifest& manifest);

/// One line per artifact: kind, dim, path.
[[nodiscard]] std::string manifest_text(const Manifest& manifest);

}  // namespace swarmkin::app

#endif  // SWARMKIN_APP_MANIFEST_HPP
