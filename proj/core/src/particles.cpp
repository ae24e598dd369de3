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

#include "swarmkin/particles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swarmkin/error.hpp"
#include "swarmkin/rng.hpp"

namespace swarmkin {

namespace {

Point serial_sum(std::span<const Point> positions) {
  Point sum{};
  for (const auto& p : positions) sum += p;
  return sum;
}

// Interaction sum (1/N) sum_j P(x_i, x_j)(x_i - x_j) for every particle flagged in `active`.
void cucker_smale_interaction(const ParticleEnsemble& ens, const CuckerSmaleKernel& kernel,
                              const std::vector<char>& active, std::vector<Point>& out) {
  const std::size_t n = ens.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = ens.positions[j].x;
    ys[j] = ens.positions[j].y;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  const bool unit_gamma = kernel.gamma == 1.0;
  const InteractionKernel general{kernel};
  const long long count = static_cast<long long>(n);

#pragma omp parallel for schedule(dynamic, 64)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (!active[i]) {
      out[i] = {};
      continue;
    }
    const double xi = xs[i];
    const double yi = ys[i];
    double sx = 0.0;
    double sy = 0.0;
    if (unit_gamma) {
      // Lane-wise partial sums in a fixed order chosen at compile time, so the
      // result does not depend on the number of threads.
#pragma omp simd reduction(+ : sx, sy)
      for (std::size_t j = 0; j < n; ++j) {
        const double dx = xi - xs[j];
        const double dy = yi - ys[j];
        const double w = 1.0 / (1.0 + dx * dx + dy * dy);
        sx += w * dx;
        sy += w * dy;
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        const double dx = xi - xs[j];
        const double dy = yi - ys[j];
        const double w = kernel_weight(general, dx * dx + dy * dy);
        sx += w * dx;
        sy += w * dy;
      }
    }
    out[i] = Point{sx, sy} * inv_n;
  }
}

void check_finite(const ParticleEnsemble& ens) {
  for (std::size_t i = 0; i < ens.size(); ++i) {
    if (!is_finite(ens.positions[i])) {
      std::ostringstream msg;
      msg << "non-finite position for particle " << i << " after step " << ens.step;
      throw NumericalError(msg.str(), ens.step);
    }
  }
}

}  // namespace

Point ParticleEnsemble::mean() const {
  if (positions.empty()) throw DomainError("empty ensemble");
  return serial_sum(positions) * (1.0 / static_cast<double>(positions.size()));
}

double ParticleEnsemble::energy() const {
  if (positions.empty()) throw DomainError("empty ensemble");
  double sum = 0.0;
  for (const auto& p : positions) sum += norm2(p);
  return 0.5 * sum / static_cast<double>(positions.size());
}

Point ParticleEnsemble::stddev() const {
  const Point u = mean();
  Point acc{};
  for (const auto& p : positions) {
    const Point d = p - u;
    acc += Point{d.x * d.x, d.y * d.y};
  }
  const double inv = 1.0 / static_cast<double>(positions.size());
  return {std::sqrt(acc.x * inv), std::sqrt(acc.y * inv)};
}

ParticleEnsemble sample_initial_mixture(std::span<const MixtureComponent> components, int dim, std::size_t n,
                                        std::uint64_t seed) {
  if (components.empty()) throw ConfigError("initial mixture: no components");
  if (dim != 1 && dim != 2) throw ConfigError("initial mixture: dim must be 1 or 2");
  if (n == 0) throw ConfigError("initial mixture: at least one particle is required");
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) throw ConfigError("initial mixture: weights must be positive");
    if (!(c.variance >= 0.0)) throw ConfigError("initial mixture: variances must be nonnegative");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ConfigError("initial mixture: weights must sum to 1");

  std::vector<double> cumulative;
  cumulative.reserve(components.size());
  double running = 0.0;
  for (const auto& c : components) cumulative.push_back(running += c.weight);

  ParticleEnsemble ens;
  ens.dim = dim;
  ens.seed = seed;
  ens.positions.resize(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::uint64_t>(ii);
    const auto u = uniform4(seed, RngStream::initial_condition, i, 0);
    const double pick = u[0] * running;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
    const auto& c = components[std::min<std::size_t>(it - cumulative.begin(), components.size() - 1)];
    const auto xi = standard_normal2(seed, RngStream::initial_condition, i, 1);
    const double s = std::sqrt(c.variance);
    Point p{c.mean.x + s * xi[0], dim == 2 ? c.mean.y + s * xi[1] : 0.0};
    ens.positions[i] = p;
  }
  return ens;
}

void em_step_discontinuous(ParticleEnsemble& ens, const ModelParams& params, const InteractionKernel& kernel,
                           double dt, Noise noise) {
  const std::size_t n = ens.size();
  if (n == 0) throw DomainError("em_step_discontinuous: empty ensemble");
  const TargetDomain target = TargetDomain::of(params);

  std::vector<char> outside(n);
  for (std::size_t i = 0; i < n; ++i) outside[i] = static_cast<char>(indicator_complement(target, ens.positions[i]));

  std::vector<Point> interaction(n);
  if (params.mu != 0.0) {
    if (const auto* cs = std::get_if<CuckerSmaleKernel>(&kernel)) {
      cucker_smale_interaction(ens, *cs, outside, interaction);
    } else {
      const Point u = ens.mean();
      for (std::size_t i = 0; i < n; ++i) interaction[i] = ens.positions[i] - u;
    }
  }

  const double amplitude = noise == Noise::on ? std::sqrt(2.0 * params.sigma2 * dt) : 0.0;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Point& x = ens.positions[i];
    Point move{};
    if (outside[i]) move = (params.lambda * (x - params.x0) + params.mu * interaction[i]) * (-dt);
    if (amplitude > 0.0) {
      const auto xi = standard_normal2(ens.seed, RngStream::dynamics, i, ens.step);
      move += Point{amplitude * xi[0], ens.dim == 2 ? amplitude * xi[1] : 0.0};
    }
    x += move;
  }
  ++ens.step;
  ens.time += dt;
}

double surrogate_noise_amplitude(const ModelParams& params, const Point& x, const Point& center) {
  return std::sqrt(2.0 * kappa_eval(params, x, center));
}

void em_step_surrogate(ParticleEnsemble& ens, const ModelParams& params, double dt, Noise noise) {
  const std::size_t n = ens.size();
  if (n == 0) throw DomainError("em_step_surrogate: empty ensemble");
  const Point center = shifted_center(params, ens.mean());
  const double sqrt_dt = std::sqrt(dt);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Point& x = ens.positions[i];
    Point move = (x - center) * (-dt);
    if (noise == Noise::on) {
      const double amplitude = surrogate_noise_amplitude(params, x, center) * sqrt_dt;
      const auto xi = standard_normal2(ens.seed, RngStream::dynamics, i, ens.step);
      move += Point{amplitude * xi[0], ens.dim == 2 ? amplitude * xi[1] : 0.0};
    }
    x += move;
  }
  ++ens.step;
  ens.time += dt;
}

void SdeConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("particles: dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("particles: t_end must be nonnegative");
  if (record_every == 0) throw ConfigError("particles: record_every must be at least 1");
  if (const auto* cs = std::get_if<CuckerSmaleKernel>(&kernel); cs && !(cs->gamma > 0.0)) {
    throw ConfigError("particles: Cucker-Smale gamma must be positive");
  }
}

ParticleRun run(ParticleEnsemble ens, const ModelParams& params, const SdeConfig& config) {
  config.validate();
  if (ens.size() == 0) throw DomainError("run: empty ensemble");
  if (config.seed) ens.seed = *config.seed;

  const std::uint64_t steps = step_count(config.t_end, config.dt);
  std::vector<std::uint64_t> snapshot_steps;
  for (double t : config.snapshot_times) snapshot_steps.push_back(step_count(t, config.dt));

  ParticleRun out;
  auto record = [&](std::uint64_t k) {
    out.record.times.push_back(static_cast<double>(k) * config.dt);
    out.record.mass.push_back(1.0);
    out.record.mean.push_back(ens.mean());
    out.record.stddev.push_back(ens.stddev());
    out.record.energy.push_back(ens.energy());
  };
  auto snapshot = [&](std::uint64_t k) {
    for (auto s : snapshot_steps) {
      if (s == k) {
        out.snapshots.push_back({static_cast<double>(k) * config.dt, ens.positions});
        break;
      }
    }
  };

  const std::size_t n0 = ens.size();
  record(0);
  snapshot(0);
  for (std::uint64_t k = 1; k <= steps; ++k) {
    if (config.model == ParticleModel::discontinuous) {
      em_step_discontinuous(ens, params, config.kernel, config.dt);
    } else {
      em_step_surrogate(ens, params, config.dt);
    }
    check_finite(ens);
    if (ens.size() != n0) throw NumericalError("particle count changed", k);
    if (k % config.record_every == 0 || k == steps) record(k);
    snapshot(k);
  }
  out.final_state = std::move(ens);
  return out;
}

HistogramSpec HistogramSpec::centered_on(const GridAxis& axis) {
  return {axis.lo - 0.5 * axis.dx, axis.hi() + 0.5 * axis.dx, axis.n};
}

Histogram histogram(std::span<const Point> positions, int dim, const HistogramSpec& layout) {
  if (!(layout.hi > layout.lo)) throw ConfigError("histogram: lo must be smaller than hi");
  if (layout.bins == 0) throw ConfigError("histogram: bins must be at least 1");
  if (positions.empty()) throw DomainError("histogram: no particles");
  const double width = (layout.hi - layout.lo) / static_cast<double>(layout.bins);
  Histogram out{GridField(GridAxis{layout.lo + 0.5 * width, width, layout.bins}, dim), 0, 0};

  auto bin_of = [&](double v) -> std::optional<std::size_t> {
    if (!(v >= layout.lo && v <= layout.hi)) return std::nullopt;
    const auto k = static_cast<std::size_t>(std::floor((v - layout.lo) / width));
    return std::min(k, layout.bins - 1);
  };

  std::vector<std::size_t> counts(out.density.size(), 0);
  for (const auto& p : positions) {
    const auto bx = bin_of(p.x);
    const auto by = dim == 2 ? bin_of(p.y) : std::optional<std::size_t>{0};
    if (!bx || !by) {
      ++out.overflow;
      continue;
    }
    ++counts[*by * layout.bins + *bx];
    ++out.recorded;
  }
  const double scale = 1.0 / (static_cast<double>(positions.size()) * out.density.cell_volume());
  for (std::size_t k = 0; k < counts.size(); ++k) out.density[k] = static_cast<double>(counts[k]) * scale;
  return out;
}

}  // namespace swarmkin
