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

#ifndef SWARMKIN_DIAGNOSTICS_HPP
#define SWARMKIN_DIAGNOSTICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swarmkin/grid.hpp"
#include "swarmkin/model.hpp"
#include "swarmkin/record.hpp"

namespace swarmkin {

struct EntropyValue {
  double value = 0.0;
  /// First cell where f > 0 but g = 0; value is +inf then.
  std::optional<std::size_t> offending_cell;
};

/// sum f log(f / g) dx^d over the nodes. Cells with f below 1e-300 contribute nothing.
/// Throws ConfigError when the grids differ.
[[nodiscard]] EntropyValue relative_entropy(const GridField& f, const GridField& g);

/// sum |f - g| dx^d. Throws ConfigError when the grids differ.
[[nodiscard]] double l1_distance(const GridField& f, const GridField& g);

/// A scalar quantity sampled over time, e.g. an entropy or a distance.
struct DecaySeries {
  std::vector<double> times;
  std::vector<double> values;
  std::string label;

  /// Throws DomainError unless times increase strictly and all values are finite.
  void validate() const;
};

struct PowerLawFit {
  double exponent = 0.0;   ///< p in c t^-p
  double prefactor = 0.0;  ///< c
  double residual = 0.0;   ///< RMS misfit of log values
};

struct ExponentialFit {
  double rate = 0.0;       ///< r in c exp(-r t)
  double prefactor = 0.0;
  double residual = 0.0;
};

struct DecayFit {
  PowerLawFit power;
  ExponentialFit exponential;
  std::size_t points = 0;
  double t0 = 0.0;
  double t1 = 0.0;
};

/// Least-squares fits of log H against log t and against t over [t0, t1].
/// Throws DomainError with fewer than 3 points in the window or a nonpositive
/// value (or time, for the power law) inside it.
[[nodiscard]] DecayFit decay_rate_fit(const DecaySeries& series, double t0, double t1);

/// Default window [t_end / 2, t_end].
[[nodiscard]] DecayFit decay_rate_fit(const DecaySeries& series);

struct MomentReport {
  std::vector<double> times;
  std::vector<double> mean_deviation;  ///< |u(t) - closed-form mean|
  double max_mean_deviation = 0.0;
  double energy_bound = 0.0;
  double max_energy = 0.0;
  bool energy_within_bound = true;
};

/// Compares a record's mean with the closed-form mean law started from the
/// recorded mean at the first time, and its energy with the a priori bound.
[[nodiscard]] MomentReport moment_report(const TrajectoryRecord& record, const ModelParams& params);

/// Linear (bilinear in 2D) interpolation of `fine` onto the nodes of `coarse`,
/// renormalized to unit mass. Throws DomainError if a coarse node is outside the fine grid.
[[nodiscard]] GridField restrict_to(const GridField& fine, const GridAxis& coarse);

/// H(f(t) | reference) for every snapshot, the reference restricted to the snapshots' grid.
[[nodiscard]] DecaySeries reference_solution_entropy(std::span<const FieldSnapshot> series,
                                                     const GridField& fine_reference);

}  // namespace swarmkin

#endif  // SWARMKIN_DIAGNOSTICS_HPP
