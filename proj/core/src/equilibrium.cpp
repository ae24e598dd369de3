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

#include "swarmkin/equilibrium.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "swarmkin/error.hpp"

namespace swarmkin {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inner_mass(double m2, double delta) {
  if (!(m2 > 0.0 && m2 < 1.0)) throw DomainError("inner mass m2 must lie in (0, 1)");
  if (!(delta > 0.0)) throw DomainError("target radius delta must be positive");
}

// Mass residual of the 1D system after eliminating m1 through continuity.
// With z = delta / sqrt(2 sigma2) it reduces to m2 (1 + sqrt(pi) erfcx(z) / (2 z)) - 1.
double reduced_residual_1d(double sigma2, double m2, double delta) {
  const double z = delta / std::sqrt(2.0 * sigma2);
  return m2 * std::sqrt(kPi) * erfcx(z) / (2.0 * z) + m2 - 1.0;
}

}  // namespace

double erfcx(double z) noexcept {
  if (z < 25.0) return std::exp(z * z) * std::erfc(z);
  const double s = 1.0 / (2.0 * z * z);
  // Asymptotic series; truncation error below 1e-12 relative for z >= 25.
  const double series = 1.0 - s * (1.0 - 3.0 * s * (1.0 - 5.0 * s * (1.0 - 7.0 * s)));
  return series / (z * std::sqrt(kPi));
}

std::array<double, 2> system1_residuals(double m1, double sigma2, double m2, double delta) {
  const double z = delta / std::sqrt(2.0 * sigma2);
  return {m1 * std::erfc(z) + m2 - 1.0,
          m1 / std::sqrt(2.0 * kPi * sigma2) * std::exp(-z * z) - m2 / (2.0 * delta)};
}

std::array<double, 2> system2_residuals(double m1, double sigma2, double m2, double delta) {
  const double e = std::exp(-delta * delta / (2.0 * sigma2));
  return {m1 * e + m2 - 1.0, m1 / (2.0 * sigma2) * e - m2 / (delta * delta)};
}

OuterConstants solve_constants_1d(double m2, double delta) {
  require_inner_mass(m2, delta);

  const double scan_lo = 1e-4;
  const double scan_hi = 10.0 * delta * delta;
  constexpr int kScanSteps = 200;

  double lo = scan_lo;
  double r_lo = reduced_residual_1d(lo, m2, delta);
  double hi = lo;
  bool bracketed = r_lo == 0.0;
  if (bracketed) hi = lo;
  for (int k = 1; k <= kScanSteps && !bracketed && scan_hi > scan_lo; ++k) {
    const double s = scan_lo * std::pow(scan_hi / scan_lo, static_cast<double>(k) / kScanSteps);
    const double r = reduced_residual_1d(s, m2, delta);
    if ((r_lo < 0.0) != (r < 0.0) || r == 0.0) {
      hi = s;
      bracketed = true;
    } else {
      lo = s;
      r_lo = r;
    }
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "solve_constants_1d: no sign change of the mass residual for sigma2 in [" << scan_lo << ", "
        << scan_hi << "]";
    throw BracketError(msg.str(), scan_lo, scan_hi);
  }

  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const double r = reduced_residual_1d(mid, m2, delta);
    if (r == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((r < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
    }
  }
  const double sigma2 = 0.5 * (lo + hi);
  const double m1 = m2 / (2.0 * delta) * std::sqrt(2.0 * kPi * sigma2) * std::exp(delta * delta / (2.0 * sigma2));
  return {m1, sigma2};
}

OuterConstants solve_constants_2d(double m2, double delta) {
  require_inner_mass(m2, delta);
  const double sigma2 = delta * delta * (1.0 - m2) / (2.0 * m2);
  return {(1.0 - m2) * std::exp(delta * delta / (2.0 * sigma2)), sigma2};
}

MassConstants solve_mass_1d(double sigma2, double delta) {
  if (!(sigma2 > 0.0 && delta > 0.0)) throw DomainError("solve_mass_1d: sigma2 and delta must be positive");
  // [erfc(z)  1      ] [m1]   [1]
  // [a       -1/2delta] [m2] = [0]
  const double z = delta / std::sqrt(2.0 * sigma2);
  const double a = std::exp(-z * z) / std::sqrt(2.0 * kPi * sigma2);
  const double b = 1.0 / (2.0 * delta);
  const double det = -std::erfc(z) * b - a;
  return {-b / det, -a / det};
}

MassConstants solve_mass_2d(double sigma2, double delta) {
  if (!(sigma2 > 0.0 && delta > 0.0)) throw DomainError("solve_mass_2d: sigma2 and delta must be positive");
  const double d2 = delta * delta;
  const double m2 = d2 / (d2 + 2.0 * sigma2);
  return {(1.0 - m2) * std::exp(d2 / (2.0 * sigma2)), m2};
}

EquilibriumProfile EquilibriumProfile::from_inner_mass(double m2, double delta, int dim, Point x0) {
  if (dim != 1 && dim != 2) throw DomainError("equilibrium profiles exist for dim 1 or 2");
  const auto c = dim == 1 ? solve_constants_1d(m2, delta) : solve_constants_2d(m2, delta);
  return {c.m1, m2, c.sigma2, delta, x0, dim};
}

EquilibriumProfile EquilibriumProfile::from_sigma2(double sigma2, double delta, int dim, Point x0) {
  if (dim != 1 && dim != 2) throw DomainError("equilibrium profiles exist for dim 1 or 2");
  const auto c = dim == 1 ? solve_mass_1d(sigma2, delta) : solve_mass_2d(sigma2, delta);
  return {c.m1, c.m2, sigma2, delta, x0, dim};
}

void EquilibriumProfile::validate() const {
  if (!(m1 > 0.0)) throw DomainError("profile: m1 must be positive");
  if (!(m2 > 0.0 && m2 < 1.0)) throw DomainError("profile: m2 must lie in (0, 1)");
  if (!(sigma2 > 0.0 && delta > 0.0)) throw DomainError("profile: sigma2 and delta must be positive");
  if (dim != 1 && dim != 2) throw DomainError("profile: dim must be 1 or 2");
}

double f_infty_eval(const EquilibriumProfile& p, const Point& x) noexcept {
  const double r2 = norm2(x - p.x0);
  if (r2 >= p.delta * p.delta) {
    const double norm_const = p.dim == 1 ? std::sqrt(2.0 * kPi * p.sigma2) : 2.0 * kPi * p.sigma2;
    return p.m1 / norm_const * std::exp(-r2 / (2.0 * p.sigma2));
  }
  // m2 Gamma(d/2 + 1) / (delta^d pi^(d/2)) with Gamma(3/2) = sqrt(pi)/2 and Gamma(2) = 1.
  return p.dim == 1 ? p.m2 / (2.0 * p.delta) : p.m2 / (kPi * p.delta * p.delta);
}

double f_q_eval(const EquilibriumProfile& profile, const Point& xtilde0, const Point& x) noexcept {
  EquilibriumProfile shifted = profile;
  shifted.x0 = xtilde0;
  return f_infty_eval(shifted, x);
}

GridField discretize_f_infty(const EquilibriumProfile& profile, const GridAxis& axis) {
  return GridField::sample(axis, profile.dim, [&](Point x) { return f_infty_eval(profile, x); });
}

}  // namespace swarmkin
