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

#ifndef SWARMKIN_FP_SOLVER_HPP
#define SWARMKIN_FP_SOLVER_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "swarmkin/grid.hpp"
#include "swarmkin/model.hpp"
#include "swarmkin/nonlocal_drift.hpp"
#include "swarmkin/particles.hpp"
#include "swarmkin/record.hpp"

namespace swarmkin {

enum class Equation {
  discontinuous,  ///< drift B[f] switched off inside the target, constant diffusion sigma2
  surrogate,      ///< uniform interaction: drift x - (lambda x0 + mu u), diffusion kappa around that center
  nonlocal,       ///< full drift B[f] with any kernel, diffusion kappa around lambda x0 + mu u
};

enum class Integrator { rk4, splitting };

struct FpConfig {
  Equation equation = Equation::surrogate;
  Integrator integrator = Integrator::rk4;
  /// Time step; zero or negative selects dx^2 / 10.
  double dt = 0.0;
  double t_end = 1.0;
  std::size_t record_every = 1;
  std::vector<double> snapshot_times;
  /// Fraction of the explicit-diffusion limit dx^2 / (2 d kappa_max) that dt may use.
  double safety = 1.0;
  DriftRoute drift_route = DriftRoute::automatic;

  void validate() const;
};

/// dt after resolving the dx^2 / 10 default.
[[nodiscard]] double resolved_dt(const FpConfig& config, const GridAxis& axis);

/// Explicit-diffusion step limit dx^2 / (2 d kappa_max) for the configured equation.
[[nodiscard]] double stability_limit(Equation equation, const ModelParams& params, const GridAxis& axis, int dim);

/// Throws ConfigError when dt exceeds safety * stability_limit.
void check_stability(const FpConfig& config, const ModelParams& params, const GridAxis& axis, int dim);

/// Interpolation weight of the exponential-fitting flux, 1/w - 1/(e^w - 1).
/// Tends to 1/2 as w -> 0, to 0 for large positive w and to 1 for large negative w.
[[nodiscard]] double fitting_weight(double w) noexcept;

/// F = C [(1 - theta) f_hi + theta f_lo] + D (f_hi - f_lo) / dx at every interface,
/// theta = fitting_weight(C dx / D). Boundary fluxes are implicit zeros.
[[nodiscard]] InterfaceField flux_assemble(const GridField& density, const InterfaceField& drift,
                                           const InterfaceField& diffusion);

/// Writes the flux divergence (the time derivative of the density) into `out`.
void flux_divergence(const InterfaceField& flux, std::span<double> out);

/// Moving frame of the splitting. At the start of each step the frame center
/// is lambda x0 + mu u, u the mean of the density; during the step it follows
/// the closed-form mean law from there.
struct SplittingFrame {
  /// +1 transports with the speed derived from the change of variables; -1
  /// flips it (only useful to show that the flipped convention is inconsistent).
  double transport_sign = 1.0;
};

/// Right-hand side and time steppers for one grid, equation and parameter set.
/// Owns scratch storage and the nonlocal evaluator; not shareable across threads.
class FpOperator {
 public:
  FpOperator(GridAxis axis, int dim, Equation equation, ModelParams params, InteractionKernel kernel,
             DriftRoute route = DriftRoute::automatic);

  /// Interface drift C and diffusion D of the current state.
  void coefficients(const GridField& density, InterfaceField& drift, InterfaceField& diffusion);
  /// Coefficients of the frozen-center drift-diffusion problem used by the splitting.
  void frame_coefficients(const Point& center, InterfaceField& drift, InterfaceField& diffusion) const;

  /// d f / d t for the current state.
  void rhs(const GridField& density, std::span<double> out);

  /// One classical RK4 step of size dt.
  void rk4_step(GridField& density, double dt);

  /// Drift-diffusion substep around a frozen center followed by the transport
  /// substep of the moving frame, from t to t + dt.
  void split_step(GridField& density, double t, double dt, const SplittingFrame& frame);

  [[nodiscard]] Equation equation() const noexcept { return equation_; }
  [[nodiscard]] const ModelParams& params() const noexcept { return params_; }

 private:
  void frozen_rhs(const GridField& density, std::span<double> out);
  void divergence_of_flux(const GridField& density, const InterfaceField& drift, const InterfaceField& diffusion,
                          std::span<double> out);

  GridAxis axis_;
  int dim_;
  std::array<std::vector<Point>, 2> at_;  // interface positions
  std::array<std::vector<Point>, 2> lo_;  // node below each interface
  std::array<std::vector<Point>, 2> hi_;  // node above each interface
  std::array<std::vector<double>, 2> relax_;   // lambda (x - x0) along the axis
  std::array<std::vector<char>, 2> outside_;   // 1 outside the target ball
  Equation equation_;
  ModelParams params_;
  InteractionKernel kernel_;
  NonlocalDrift nonlocal_;
  InterfaceField drift_;
  InterfaceField diffusion_;
  InterfaceField frozen_drift_;
  InterfaceField frozen_diffusion_;
  InterfaceField flux_;
  std::vector<double> stage_[4];
  GridField scratch_;
};

/// Transport speed lambda mu (u - x0) exp(-lambda s) of a frame anchored at mean u, s after the anchor time.
[[nodiscard]] Point splitting_velocity(const ModelParams& params, const SplittingFrame& frame, const Point& anchor_mean,
                                       double elapsed);

/// Moves the density by `shift` with conservative linear interpolation; mass
/// pushed past the boundary is returned to the boundary node.
void shift_remap(GridField& density, const Point& shift);

/// Advances one step with RK4 (checks the step bound first).
[[nodiscard]] GridField step(const GridField& density, const FpConfig& config, const ModelParams& params,
                             const InteractionKernel& kernel, double t);

/// Advances one splitting step. Throws ConfigError unless the kernel is uniform.
[[nodiscard]] GridField split_step(const GridField& density, const ModelParams& params,
                                   const InteractionKernel& kernel, double t, double dt,
                                   const SplittingFrame& frame);

struct FpRun {
  TrajectoryRecord record;
  GridField final_field;
  std::vector<FieldSnapshot> snapshots;
};

/// Integrates to t_end. The record holds mass, mean, spread and energy, plus
/// H(f | entropy_reference) when a reference on the same grid is given.
/// Throws ConfigError before stepping when the configuration is invalid or
/// unstable, NumericalError on non-finite values.
[[nodiscard]] FpRun solve(const GridField& initial, const FpConfig& config, const ModelParams& params,
                          const InteractionKernel& kernel, const GridField* entropy_reference = nullptr);

/// Node samples of a Gaussian mixture, renormalized to unit mass on the grid.
[[nodiscard]] GridField discretize_mixture(std::span<const MixtureComponent> components, const GridAxis& axis,
                                           int dim);

}  // namespace swarmkin

#endif  // SWARMKIN_FP_SOLVER_HPP
