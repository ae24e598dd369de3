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

#ifndef SWARMKIN_PARTICLES_HPP
#define SWARMKIN_PARTICLES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swarmkin/grid.hpp"
#include "swarmkin/model.hpp"
#include "swarmkin/point.hpp"
#include "swarmkin/record.hpp"

namespace swarmkin {

/// Isotropic Gaussian component of an initial mixture.
struct MixtureComponent {
  double weight = 1.0;
  Point mean{};
  double variance = 1.0;

  friend bool operator==(const MixtureComponent&, const MixtureComponent&) = default;
};

/// N agents plus the clock. The noise stream is keyed on (seed, particle, step),
/// so `seed` and `step` are the whole generator state.
struct ParticleEnsemble {
  int dim = 1;
  std::vector<Point> positions;
  double time = 0.0;
  std::uint64_t step = 0;
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t size() const noexcept { return positions.size(); }
  [[nodiscard]] Point mean() const;
  /// (1/2N) sum |x_i|^2
  [[nodiscard]] double energy() const;
  /// Per-coordinate sample standard deviation.
  [[nodiscard]] Point stddev() const;
};

/// Draws N particles: component by weight, then position from its Gaussian.
/// Throws ConfigError when weights are not positive or do not sum to 1 (1e-12).
[[nodiscard]] ParticleEnsemble sample_initial_mixture(std::span<const MixtureComponent> components, int dim,
                                                      std::size_t n, std::uint64_t seed);

enum class ParticleModel {
  discontinuous,  ///< target-switched drift B[f] 1_{D^c}, constant diffusion
  surrogate,      ///< linear drift toward lambda x0 + mu u, variable diffusion kappa
};

enum class Noise { on, off };

/// One synchronous Euler-Maruyama step of the discontinuous-drift system:
/// x_i <- x_i - B_i 1_{D^c}(x_i) dt + sqrt(2 sigma2 dt) xi_i, with every B_i
/// evaluated on the pre-step configuration.
void em_step_discontinuous(ParticleEnsemble& ens, const ModelParams& params, const InteractionKernel& kernel,
                           double dt, Noise noise = Noise::on);

/// One step of the surrogate system: x_i <- x_i - (x_i - xt) dt + sqrt(2 kappa(x_i, xt) dt) xi_i
/// with xt = lambda x0 + mu * (pre-step empirical mean).
void em_step_surrogate(ParticleEnsemble& ens, const ModelParams& params, double dt, Noise noise = Noise::on);

/// Noise amplitude sqrt(2 kappa(x, center)) of the surrogate system.
[[nodiscard]] double surrogate_noise_amplitude(const ModelParams& params, const Point& x, const Point& center);

struct SdeConfig {
  double dt = 1e-2;
  double t_end = 1.0;
  ParticleModel model = ParticleModel::discontinuous;
  InteractionKernel kernel = UniformKernel{};
  /// Reseeds the dynamics stream when set; otherwise the ensemble's seed is kept.
  std::optional<std::uint64_t> seed;
  /// Steps between two rows of the trajectory record.
  std::size_t record_every = 1;
  /// Times at which full particle snapshots are kept (rounded to the step grid).
  std::vector<double> snapshot_times;

  void validate() const;
};

struct ParticleSnapshot {
  double time = 0.0;
  std::vector<Point> positions;
};

struct ParticleRun {
  TrajectoryRecord record;
  ParticleEnsemble final_state;
  std::vector<ParticleSnapshot> snapshots;
};

/// Integrates to t_end. Throws NumericalError (with the step index) on non-finite positions.
[[nodiscard]] ParticleRun run(ParticleEnsemble ens, const ModelParams& params, const SdeConfig& config);

/// Histogram bins of width (hi - lo) / bins on [lo, hi] per axis.
struct HistogramSpec {
  double lo = -5.0;
  double hi = 5.0;
  std::size_t bins = 101;

  /// Bins centered on the nodes of `axis`, so the histogram lives on the same nodes.
  static HistogramSpec centered_on(const GridAxis& axis);
};

struct Histogram {
  GridField density;          ///< count / (N * cell volume) at bin centers
  std::size_t overflow = 0;   ///< particles outside [lo, hi]^d
  std::size_t recorded = 0;   ///< particles inside [lo, hi]^d
};

[[nodiscard]] Histogram histogram(std::span<const Point> positions, int dim, const HistogramSpec& layout);
[[nodiscard]] inline Histogram histogram(const ParticleEnsemble& ens, const HistogramSpec& layout) {
  return histogram(ens.positions, ens.dim, layout);
}

}  // namespace swarmkin

#endif  // SWARMKIN_PARTICLES_HPP
