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

#ifndef SWARMKIN_APP_CONFIG_HPP
#define SWARMKIN_APP_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmkin/fp_solver.hpp"
#include "swarmkin/model.hpp"
#include "swarmkin/particles.hpp"

namespace swarmkin::app {

enum class ExperimentKind { equilibrium, particles, fp, compare, entropy };

[[nodiscard]] std::string to_string(ExperimentKind kind);
[[nodiscard]] std::optional<ExperimentKind> parse_kind(const std::string& name);
[[nodiscard]] std::string to_string(ParticleModel model);
[[nodiscard]] std::string to_string(Equation equation);
[[nodiscard]] std::string to_string(Integrator integrator);

/// Named initial mixtures, e.g. "f0_test1".
[[nodiscard]] const std::vector<std::string>& preset_names();
/// Components of a named initial mixture; nullopt for an unknown name.
[[nodiscard]] std::optional<std::vector<MixtureComponent>> preset_components(const std::string& name);

struct InitialCondition {
  std::string preset;  ///< empty when the components are listed explicitly
  std::vector<MixtureComponent> components;

  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

struct GridSpec {
  double lo = -5.0;
  double hi = 5.0;
  std::size_t nx = 101;

  [[nodiscard]] GridAxis axis() const { return GridAxis::from_bounds(lo, hi, nx); }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct ParticleSettings {
  std::size_t n = 10000;
  double dt = 1e-2;
  double t_end = 1.0;
  std::vector<ParticleModel> models{ParticleModel::discontinuous};
  std::size_t record_every = 1;
  std::vector<double> snapshot_times;

  friend bool operator==(const ParticleSettings&, const ParticleSettings&) = default;
};

struct FpSettings {
  std::vector<Equation> equations{Equation::surrogate};
  Integrator integrator = Integrator::rk4;
  double dt = 0.0;  ///< 0 selects dx^2 / 10
  double t_end = 1.0;
  std::size_t record_every = 1;
  std::vector<double> snapshot_times;
  double safety = 1.0;

  friend bool operator==(const FpSettings&, const FpSettings&) = default;
};

enum class EntropyReference { analytic, solution };

struct EntropySettings {
  std::vector<double> lambdas{0.2, 0.5, 0.8};
  EntropyReference reference = EntropyReference::analytic;
  std::size_t reference_nx = 801;
  double reference_t_end = 50.0;
  double reference_safety = 0.5;
  /// Fit window; empty means [t_end / 2, t_end].
  std::optional<std::pair<double, double>> fit_window;

  friend bool operator==(const EntropySettings&, const EntropySettings&) = default;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::fp;
  std::uint64_t seed = 1;
  std::string output = "out";
  ModelParams model;
  /// When set, sigma2 was derived from this steady inner mass and delta.
  std::optional<double> inner_mass;
  InteractionKernel kernel = UniformKernel{};
  InitialCondition initial;
  GridSpec grid;
  ParticleSettings particles;
  FpSettings fp;
  EntropySettings entropy;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Every problem found while reading a configuration, one message per entry.
class ConfigErrors : public std::runtime_error {
 public:
  explicit ConfigErrors(std::vector<std::string> errors);
  [[nodiscard]] const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Parses and validates YAML text. `source` names the origin in messages.
/// Throws ConfigErrors listing all problems with their key paths and lines.
[[nodiscard]] ExperimentConfig parse_config(const std::string& text, const std::string& source = "<string>");
[[nodiscard]] ExperimentConfig load_config(const std::string& path);

/// YAML text that parse_config maps back to the same configuration.
[[nodiscard]] std::string write_config(const ExperimentConfig& config);

/// Semantic checks across blocks; empty when the configuration can run.
[[nodiscard]] std::vector<std::string> validate(const ExperimentConfig& config);

}  // namespace swarmkin::app

#endif  // SWARMKIN_APP_CONFIG_HPP
