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

#ifndef SWARMKIN_EQUILIBRIUM_HPP
#define SWARMKIN_EQUILIBRIUM_HPP

#include <array>

#include "swarmkin/grid.hpp"
#include "swarmkin/point.hpp"

namespace swarmkin {

/// Constants (m1, m2, sigma2, delta, x0, d) of the stationary density: a
/// Gaussian of weight m1 outside the target ball and a uniform density of
/// mass m2 inside it.
struct EquilibriumProfile {
  double m1 = 1.0;
  double m2 = 0.5;
  double sigma2 = 1.0;
  double delta = 1.0;
  Point x0{};
  int dim = 1;

  /// Profile whose inner mass is `m2`; sigma2 and m1 are solved for.
  static EquilibriumProfile from_inner_mass(double m2, double delta, int dim, Point x0 = {});
  /// Profile for a given diffusion; m1 and m2 are solved for.
  static EquilibriumProfile from_sigma2(double sigma2, double delta, int dim, Point x0 = {});

  void validate() const;
};

struct OuterConstants {
  double m1;
  double sigma2;
};

struct MassConstants {
  double m1;
  double m2;
};

/// Residuals of the 1D mass and continuity equations.
[[nodiscard]] std::array<double, 2> system1_residuals(double m1, double sigma2, double m2, double delta);
/// Residuals of the 2D mass and continuity equations.
[[nodiscard]] std::array<double, 2> system2_residuals(double m1, double sigma2, double m2, double delta);

/// Solves the 1D system for (m1, sigma2) given the inner mass.
///
/// m1 is eliminated with the continuity equation and the mass residual is
/// bisected in sigma2 (tolerance 1e-12) after a logarithmic scan of
/// [1e-4, 10 delta^2] for a sign change. Throws DomainError when m2 is not in
/// (0, 1) and BracketError when the scan finds no sign change.
[[nodiscard]] OuterConstants solve_constants_1d(double m2, double delta);

/// Closed-form 2D solution sigma2 = delta^2 (1 - m2) / (2 m2), m1 = (1 - m2) exp(delta^2 / (2 sigma2)).
[[nodiscard]] OuterConstants solve_constants_2d(double m2, double delta);

/// The 1D system is linear in (m1, m2) for fixed sigma2 and delta.
[[nodiscard]] MassConstants solve_mass_1d(double sigma2, double delta);
[[nodiscard]] MassConstants solve_mass_2d(double sigma2, double delta);

/// Stationary density at x.
[[nodiscard]] double f_infty_eval(const EquilibriumProfile& profile, const Point& x) noexcept;

/// Quasi-stationary density: the stationary profile re-centered at `xtilde0`.
[[nodiscard]] double f_q_eval(const EquilibriumProfile& profile, const Point& xtilde0, const Point& x) noexcept;

/// Node samples of the stationary density (not renormalized).
[[nodiscard]] GridField discretize_f_infty(const EquilibriumProfile& profile, const GridAxis& axis);

/// exp(z^2) erfc(z), accurate for large z.
[[nodiscard]] double erfcx(double z) noexcept;

}  // namespace swarmkin

#endif  // SWARMKIN_EQUILIBRIUM_HPP
