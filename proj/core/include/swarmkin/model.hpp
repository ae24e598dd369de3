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

#ifndef SWARMKIN_MODEL_HPP
#define SWARMKIN_MODEL_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "swarmkin/grid.hpp"
#include "swarmkin/point.hpp"

namespace swarmkin {

/// Scalar constants of the swarm model.
struct ModelParams {
  double lambda = 1.0;  ///< weight of the relaxation toward the target center
  double mu = 0.0;      ///< weight of the pairwise interaction
  double sigma2 = 1.0;  ///< constant diffusion
  double delta = 1.0;   ///< target radius
  Point x0{};           ///< target center
  int dim = 1;

  /// Every invariant violation, each prefixed with the offending field name.
  [[nodiscard]] std::vector<std::string> validation_errors() const;
  /// Throws ConfigError listing all violations.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct UniformKernel {
  friend bool operator==(const UniformKernel&, const UniformKernel&) = default;
};

/// P(x, y) = (1 + |x - y|^2)^(-gamma)
struct CuckerSmaleKernel {
  double gamma = 1.0;
  friend bool operator==(const CuckerSmaleKernel&, const CuckerSmaleKernel&) = default;
};

using InteractionKernel = std::variant<UniformKernel, CuckerSmaleKernel>;

[[nodiscard]] inline bool is_uniform(const InteractionKernel& kernel) noexcept {
  return std::holds_alternative<UniformKernel>(kernel);
}

/// Kernel weight as a function of the squared distance.
[[nodiscard]] double kernel_weight(const InteractionKernel& kernel, double distance2) noexcept;

/// Symmetric interaction weight P(x, y) in [0, 1].
[[nodiscard]] double kernel_eval(const InteractionKernel& kernel, const Point& x, const Point& y) noexcept;

[[nodiscard]] std::string kernel_name(const InteractionKernel& kernel);

/// Closed ball |x - center| <= radius that the swarm has to cover.
struct TargetDomain {
  Point center{};
  double radius = 1.0;

  static TargetDomain of(const ModelParams& params) { return {params.x0, params.delta}; }
};

/// 1 outside the closed target ball, 0 on it.
[[nodiscard]] int indicator_complement(const TargetDomain& domain, const Point& x) noexcept;

/// Variable diffusion sigma2 + delta^2/2 - |x - center|^2/2 inside the ball of
/// radius delta around `center`, sigma2 outside. With center = x0 this is the
/// time-independent coefficient K.
[[nodiscard]] double kappa_eval(const ModelParams& params, const Point& x, const Point& center) noexcept;

/// Upper bound sigma2 + delta^2/2 of kappa_eval.
[[nodiscard]] inline double kappa_max(const ModelParams& params) noexcept {
  return params.sigma2 + 0.5 * params.delta * params.delta;
}

/// Moving center lambda*x0 + mu*u of the uniform-interaction drift.
[[nodiscard]] inline Point shifted_center(const ModelParams& params, const Point& swarm_mean) noexcept {
  return params.lambda * params.x0 + params.mu * swarm_mean;
}

/// Drift lambda (x - x0) + mu <P(x, .)(x - .)> averaged over the empirical
/// measure of `particles` (1/N normalization). Throws DomainError on an empty set.
[[nodiscard]] Point drift_B(const ModelParams& params, const InteractionKernel& kernel, const Point& x,
                            std::span<const Point> particles);

/// Same drift with the average replaced by node quadrature over `density`
/// (weight dx^d per node). Throws DomainError on a zero-mass field.
[[nodiscard]] Point drift_B(const ModelParams& params, const InteractionKernel& kernel, const Point& x,
                            const GridField& density);

/// Closed-form swarm mean x0 + (u0 - x0) exp(-lambda t).
[[nodiscard]] Point mean_exact(const ModelParams& params, const Point& u0, double t) noexcept;

/// Energy bound for the variable-diffusion dynamics: with U bounding |u(t)|,
/// E(t) <= max(E(0), (d*kappa_max + lambda |x0| U + mu U^2) / (2 lambda)).
/// Returns +inf when lambda == 0.
[[nodiscard]] double energy_bound(const ModelParams& params, const Point& u0, double energy0) noexcept;

}  // namespace swarmkin

#endif  // SWARMKIN_MODEL_HPP
