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

#include "swarmkin/fp_solver.hpp"

#include <cmath>
#include <numbers>

#include "swarmkin/diagnostics.hpp"
#include "swarmkin/error.hpp"

namespace swarmkin {

namespace {

double kappa_cap(Equation equation, const ModelParams& params) {
  return equation == Equation::discontinuous ? params.sigma2 : kappa_max(params);
}

Point field_stddev(const GridField& f, const Point& mean) {
  Point acc{};
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Point d = f.node(k) - mean;
    acc += f[k] * Point{d.x * d.x, d.y * d.y};
  }
  acc *= f.cell_volume() / f.mass();
  return {std::sqrt(acc.x), f.dim() == 2 ? std::sqrt(acc.y) : 0.0};
}

void shift_axis(GridField& density, int along, double shift) {
  const std::size_t n = density.nx();
  const double p = shift / density.dx();
  const double m_floor = std::floor(p);
  const double frac = p - m_floor;
  const auto m = static_cast<long long>(m_floor);
  const long long last = static_cast<long long>(n) - 1;
  const std::size_t lines = density.dim() == 1 ? 1 : n;
  const std::size_t stride = along == 0 ? 1 : n;
  std::vector<double> line(n), moved(n);
  for (std::size_t l = 0; l < lines; ++l) {
    const std::size_t base = along == 0 ? l * n : l;
    for (std::size_t i = 0; i < n; ++i) line[i] = density[base + i * stride];
    std::fill(moved.begin(), moved.end(), 0.0);
    // Each node's content lands between nodes i + m and i + m + 1.
    for (std::size_t i = 0; i < n; ++i) {
      const long long target = static_cast<long long>(i) + m;
      moved[static_cast<std::size_t>(std::clamp(target, 0LL, last))] += (1.0 - frac) * line[i];
      moved[static_cast<std::size_t>(std::clamp(target + 1, 0LL, last))] += frac * line[i];
    }
    for (std::size_t i = 0; i < n; ++i) density[base + i * stride] = moved[i];
  }
}

}  // namespace

void FpConfig::validate() const {
  if (!std::isfinite(dt)) throw ConfigError("fp: dt must be finite");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("fp: t_end must be nonnegative");
  if (record_every == 0) throw ConfigError("fp: record_every must be at least 1");
  if (!(safety > 0.0 && safety <= 1.0)) throw ConfigError("fp: safety must lie in (0, 1]");
  for (double t : snapshot_times) {
    if (!(t >= 0.0)) throw ConfigError("fp: snapshot times must be nonnegative");
  }
}

double resolved_dt(const FpConfig& config, const GridAxis& axis) {
  return config.dt > 0.0 ? config.dt : axis.dx * axis.dx / 10.0;
}

double stability_limit(Equation equation, const ModelParams& params, const GridAxis& axis, int dim) {
  return axis.dx * axis.dx / (2.0 * dim * kappa_cap(equation, params));
}

void check_stability(const FpConfig& config, const ModelParams& params, const GridAxis& axis, int dim) {
  const double dt = resolved_dt(config, axis);
  const double limit = config.safety * stability_limit(config.equation, params, axis, dim);
  if (dt > limit * (1.0 + 1e-12)) {
    throw ConfigError("fp: dt = " + std::to_string(dt) + " exceeds the explicit step limit " +
                      std::to_string(limit));
  }
}

double fitting_weight(double w) noexcept {
  if (std::abs(w) < 1e-3) return 0.5 - w / 12.0 + w * w * w / 720.0;
  return 1.0 / w - 1.0 / std::expm1(w);
}

InterfaceField flux_assemble(const GridField& density, const InterfaceField& drift,
                             const InterfaceField& diffusion) {
  InterfaceField flux(density.axis(), density.dim());
  const double dx = density.dx();
  for (int a = 0; a < density.dim(); ++a) {
    const auto c = drift.values(a);
    const auto d = diffusion.values(a);
    auto out = flux.values(a);
    for (std::size_t k = 0; k < out.size(); ++k) {
      const auto [lo, hi] = flux.neighbors(a, k);
      const double theta = fitting_weight(c[k] * dx / d[k]);
      out[k] = c[k] * ((1.0 - theta) * density[hi] + theta * density[lo]) + d[k] * (density[hi] - density[lo]) / dx;
    }
  }
  return flux;
}

void flux_divergence(const InterfaceField& flux, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  const double inv_dx = 1.0 / flux.axis().dx;
  for (int a = 0; a < flux.dim(); ++a) {
    const auto values = flux.values(a);
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto [lo, hi] = flux.neighbors(a, k);
      const double g = values[k] * inv_dx;
      out[lo] += g;
      out[hi] -= g;
    }
  }
}

FpOperator::FpOperator(GridAxis axis, int dim, Equation equation, ModelParams params, InteractionKernel kernel,
                       DriftRoute route)
    : axis_(axis),
      dim_(dim),
      equation_(equation),
      params_(params),
      kernel_(kernel),
      nonlocal_(axis, dim, kernel, route),
      drift_(axis, dim),
      diffusion_(axis, dim),
      frozen_drift_(axis, dim),
      frozen_diffusion_(axis, dim),
      flux_(axis, dim),
      scratch_(axis, dim) {
  params_.validate();
  if (params_.dim != dim) throw ConfigError("fp: grid dimension differs from model dimension");
  if (equation_ == Equation::surrogate && !is_uniform(kernel_)) {
    throw ConfigError("fp: the surrogate equation is defined for the uniform kernel; use the nonlocal equation");
  }
  for (int a = 0; a < dim_; ++a) {
    const std::size_t count = drift_.size(a);
    at_[a].resize(count);
    lo_[a].resize(count);
    hi_[a].resize(count);
    relax_[a].resize(count);
    outside_[a].resize(count);
    const TargetDomain target = TargetDomain::of(params_);
    for (std::size_t k = 0; k < count; ++k) {
      const auto [lo, hi] = drift_.neighbors(a, k);
      at_[a][k] = drift_.location(a, k);
      lo_[a][k] = scratch_.node(lo);
      hi_[a][k] = scratch_.node(hi);
      relax_[a][k] = params_.lambda * (at_[a][k][a] - params_.x0[a]);
      outside_[a][k] = static_cast<char>(indicator_complement(target, at_[a][k]));
    }
  }
  for (auto& s : stage_) s.resize(scratch_.size());
}

void FpOperator::coefficients(const GridField& density, InterfaceField& drift, InterfaceField& diffusion) {
  const double inv_dx = 1.0 / axis_.dx;
  const bool variable = equation_ != Equation::discontinuous;
  const Point center = variable ? shifted_center(params_, density.mean()) : Point{};
  const bool interacting = params_.mu != 0.0 && equation_ != Equation::surrogate;
  for (int a = 0; a < dim_; ++a) {
    auto c = drift.values(a);
    auto d = diffusion.values(a);
    if (interacting) nonlocal_.interaction(density, a, c);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Point& p = at_[a][k];
      switch (equation_) {
        case Equation::discontinuous: {
          const double b = relax_[a][k] + (interacting ? params_.mu * c[k] : 0.0);
          c[k] = outside_[a][k] ? b : 0.0;
          d[k] = params_.sigma2;
          break;
        }
        case Equation::surrogate:
        case Equation::nonlocal: {
          const double b = equation_ == Equation::surrogate
                               ? p[a] - center[a]
                               : relax_[a][k] + (interacting ? params_.mu * c[k] : 0.0);
          const double grad = (kappa_eval(params_, hi_[a][k], center) - kappa_eval(params_, lo_[a][k], center)) * inv_dx;
          c[k] = b + grad;
          d[k] = kappa_eval(params_, p, center);
          break;
        }
      }
    }
  }
}

void FpOperator::frame_coefficients(const Point& center, InterfaceField& drift, InterfaceField& diffusion) const {
  const double inv_dx = 1.0 / axis_.dx;
  for (int a = 0; a < dim_; ++a) {
    auto c = drift.values(a);
    auto d = diffusion.values(a);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Point& p = at_[a][k];
      const double grad = (kappa_eval(params_, hi_[a][k], center) - kappa_eval(params_, lo_[a][k], center)) * inv_dx;
      c[k] = (p[a] - center[a]) + grad;
      d[k] = kappa_eval(params_, p, center);
    }
  }
}

void FpOperator::divergence_of_flux(const GridField& density, const InterfaceField& drift,
                                    const InterfaceField& diffusion, std::span<double> out) {
  const double dx = axis_.dx;
  for (int a = 0; a < dim_; ++a) {
    const auto c = drift.values(a);
    const auto d = diffusion.values(a);
    auto flux = flux_.values(a);
    const long long count = static_cast<long long>(flux.size());
#pragma omp parallel for schedule(static) if (count > 4096)
    for (long long kk = 0; kk < count; ++kk) {
      const auto k = static_cast<std::size_t>(kk);
      const auto [lo, hi] = flux_.neighbors(a, k);
      const double theta = c[k] == 0.0 ? 0.5 : fitting_weight(c[k] * dx / d[k]);
      flux[k] = c[k] * ((1.0 - theta) * density[hi] + theta * density[lo]) + d[k] * (density[hi] - density[lo]) / dx;
    }
  }
  flux_divergence(flux_, out);
}

void FpOperator::rhs(const GridField& density, std::span<double> out) {
  coefficients(density, drift_, diffusion_);
  divergence_of_flux(density, drift_, diffusion_, out);
}

void FpOperator::frozen_rhs(const GridField& density, std::span<double> out) {
  divergence_of_flux(density, frozen_drift_, frozen_diffusion_, out);
}

namespace {

template <class Rhs>
void rk4(GridField& f, double dt, GridField& scratch, std::vector<double> (&k)[4], Rhs&& rhs) {
  const std::size_t n = f.size();
  rhs(f, std::span<double>(k[0]));
  for (std::size_t i = 0; i < n; ++i) scratch[i] = f[i] + 0.5 * dt * k[0][i];
  rhs(scratch, std::span<double>(k[1]));
  for (std::size_t i = 0; i < n; ++i) scratch[i] = f[i] + 0.5 * dt * k[1][i];
  rhs(scratch, std::span<double>(k[2]));
  for (std::size_t i = 0; i < n; ++i) scratch[i] = f[i] + dt * k[2][i];
  rhs(scratch, std::span<double>(k[3]));
  for (std::size_t i = 0; i < n; ++i) f[i] += dt / 6.0 * (k[0][i] + 2.0 * (k[1][i] + k[2][i]) + k[3][i]);
}

}  // namespace

void FpOperator::rk4_step(GridField& density, double dt) {
  rk4(density, dt, scratch_, stage_, [this](const GridField& f, std::span<double> out) { rhs(f, out); });
}

void FpOperator::split_step(GridField& density, double t, double dt, const SplittingFrame& frame) {
  (void)t;  // the frame is re-anchored on the density every step
  const Point anchor = density.mean();
  const Point center = shifted_center(params_, anchor);
  const Point next_center = shifted_center(params_, mean_exact(params_, anchor, dt));
  frame_coefficients(center, frozen_drift_, frozen_diffusion_);
  rk4(density, dt, scratch_, stage_, [this](const GridField& f, std::span<double> out) { frozen_rhs(f, out); });

  // Transport in the moving frame displaces g(z) by the integral of the speed;
  // re-centering on the next frame displaces it by the change of center.
  const double decay = params_.lambda > 0.0 ? -std::expm1(-params_.lambda * dt) : 0.0;
  const Point transport = frame.transport_sign * params_.mu * decay * (anchor - params_.x0);
  shift_remap(density, (next_center - center) + transport);
}

Point splitting_velocity(const ModelParams& params, const SplittingFrame& frame, const Point& anchor_mean,
                         double elapsed) {
  return frame.transport_sign * params.lambda * params.mu * std::exp(-params.lambda * elapsed) *
         (anchor_mean - params.x0);
}

void shift_remap(GridField& density, const Point& shift) {
  for (int a = 0; a < density.dim(); ++a) {
    if (std::abs(shift[a]) <= 1e-14 * density.dx()) continue;
    shift_axis(density, a, shift[a]);
  }
}

GridField step(const GridField& density, const FpConfig& config, const ModelParams& params,
               const InteractionKernel& kernel, double t) {
  (void)t;  // the RK4 right-hand sides depend on time only through the density
  config.validate();
  check_stability(config, params, density.axis(), density.dim());
  FpOperator op(density.axis(), density.dim(), config.equation, params, kernel, config.drift_route);
  GridField out = density;
  op.rk4_step(out, resolved_dt(config, density.axis()));
  return out;
}

GridField split_step(const GridField& density, const ModelParams& params, const InteractionKernel& kernel,
                     double t, double dt, const SplittingFrame& frame) {
  if (!is_uniform(kernel)) throw ConfigError("fp: splitting needs the uniform kernel");
  FpOperator op(density.axis(), density.dim(), Equation::surrogate, params, kernel);
  GridField out = density;
  op.split_step(out, t, dt, frame);
  return out;
}

FpRun solve(const GridField& initial, const FpConfig& config, const ModelParams& params,
            const InteractionKernel& kernel, const GridField* entropy_reference) {
  config.validate();
  params.validate();
  if (params.dim != initial.dim()) throw ConfigError("fp: grid dimension differs from model dimension");
  if (config.integrator == Integrator::splitting) {
    if (config.equation != Equation::surrogate) throw ConfigError("fp: splitting is only defined for the surrogate equation");
    if (!is_uniform(kernel)) throw ConfigError("fp: splitting needs the uniform kernel");
  }
  if (entropy_reference && !entropy_reference->same_grid(initial)) {
    throw ConfigError("fp: entropy reference lives on a different grid");
  }
  check_stability(config, params, initial.axis(), initial.dim());
  if (!(initial.mass() > 0.0)) throw DomainError("fp: initial density has zero mass");

  FpOperator op(initial.axis(), initial.dim(), config.equation, params, kernel, config.drift_route);
  const double dt = resolved_dt(config, initial.axis());
  const std::uint64_t steps = step_count(config.t_end, dt);
  std::vector<std::uint64_t> snapshot_steps;
  for (double t : config.snapshot_times) snapshot_steps.push_back(step_count(t, dt));
  const SplittingFrame frame{};

  FpRun run;
  GridField f = initial;
  auto time_of = [&](std::uint64_t k) { return k == steps ? config.t_end : static_cast<double>(k) * dt; };
  auto record = [&](std::uint64_t k) {
    const Point u = f.mean();
    run.record.times.push_back(time_of(k));
    run.record.mass.push_back(f.mass());
    run.record.mean.push_back(u);
    run.record.stddev.push_back(field_stddev(f, u));
    run.record.energy.push_back(f.energy());
    if (entropy_reference) run.record.entropy.push_back(relative_entropy(f, *entropy_reference).value);
  };
  auto snapshot = [&](std::uint64_t k) {
    for (auto s : snapshot_steps) {
      if (s == k) {
        run.snapshots.push_back({time_of(k), f});
        break;
      }
    }
  };

  record(0);
  snapshot(0);
  for (std::uint64_t k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k - 1) * dt;
    const double h = k == steps ? config.t_end - t : dt;
    if (config.integrator == Integrator::rk4) {
      op.rk4_step(f, h);
    } else {
      op.split_step(f, t, h, frame);
    }
    if (!std::isfinite(f.mass())) throw NumericalError("fp: non-finite density after step " + std::to_string(k), k);
    if (k % config.record_every == 0 || k == steps) record(k);
    snapshot(k);
  }
  run.final_field = std::move(f);
  return run;
}

GridField discretize_mixture(std::span<const MixtureComponent> components, const GridAxis& axis, int dim) {
  if (components.empty()) throw ConfigError("initial mixture: no components");
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) throw ConfigError("initial mixture: weights must be positive");
    if (!(c.variance > 0.0)) throw ConfigError("initial mixture: a grid density needs positive variances");
  }
  GridField f = GridField::sample(axis, dim, [&](Point x) {
    double sum = 0.0;
    for (const auto& c : components) {
      const double norm_const = std::pow(2.0 * std::numbers::pi * c.variance, -0.5 * dim);
      sum += c.weight * norm_const * std::exp(-norm2(x - c.mean) / (2.0 * c.variance));
    }
    return sum;
  });
  f.normalize();
  return f;
}

}  // namespace swarmkin
