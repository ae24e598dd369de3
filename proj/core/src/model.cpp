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

#include "swarmkin/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swarmkin/error.hpp"

namespace swarmkin {

std::vector<std::string> ModelParams::validation_errors() const {
  std::vector<std::string> errors;
  if (!(lambda >= 0.0 && lambda <= 1.0)) errors.emplace_back("lambda: must lie in [0, 1]");
  if (!(mu >= 0.0 && mu <= 1.0)) errors.emplace_back("mu: must lie in [0, 1]");
  if (!(std::abs(lambda + mu - 1.0) <= 1e-12)) errors.emplace_back("mu: lambda + mu must equal 1");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) errors.emplace_back("sigma2: must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) errors.emplace_back("delta: must be positive");
  if (dim != 1 && dim != 2) errors.emplace_back("dim: must be 1 or 2");
  if (!is_finite(x0)) errors.emplace_back("x0: must be finite");
  if (dim == 1 && x0.y != 0.0) errors.emplace_back("x0: second coordinate must be 0 in 1D");
  return errors;
}

void ModelParams::validate() const {
  const auto errors = validation_errors();
  if (errors.empty()) return;
  std::ostringstream out;
  out << "invalid model parameters:";
  for (const auto& e : errors) out << "\n  " << e;
  throw ConfigError(out.str());
}

double kernel_weight(const InteractionKernel& kernel, double distance2) noexcept {
  if (const auto* cs = std::get_if<CuckerSmaleKernel>(&kernel)) {
    const double base = 1.0 + distance2;
    return cs->gamma == 1.0 ? 1.0 / base : std::pow(base, -cs->gamma);
  }
  return 1.0;
}

double kernel_eval(const InteractionKernel& kernel, const Point& x, const Point& y) noexcept {
  return kernel_weight(kernel, norm2(x - y));
}

std::string kernel_name(const InteractionKernel& kernel) {
  return is_uniform(kernel) ? "uniform" : "cucker_smale";
}

int indicator_complement(const TargetDomain& domain, const Point& x) noexcept {
  return norm2(x - domain.center) <= domain.radius * domain.radius ? 0 : 1;
}

double kappa_eval(const ModelParams& params, const Point& x, const Point& center) noexcept {
  const double r2 = norm2(x - center);
  const double d2 = params.delta * params.delta;
  if (r2 < d2) return params.sigma2 + 0.5 * d2 - 0.5 * r2;
  return params.sigma2;
}

Point drift_B(const ModelParams& params, const InteractionKernel& kernel, const Point& x,
              std::span<const Point> particles) {
  if (particles.empty()) throw DomainError("drift_B: empty particle set");
  Point interaction{};
  if (is_uniform(kernel)) {
    Point sum{};
    for (const auto& y : particles) sum += y;
    interaction = x - sum * (1.0 / static_cast<double>(particles.size()));
  } else {
    for (const auto& y : particles) interaction += kernel_eval(kernel, x, y) * (x - y);
    interaction *= 1.0 / static_cast<double>(particles.size());
  }
  return params.lambda * (x - params.x0) + params.mu * interaction;
}

Point drift_B(const ModelParams& params, const InteractionKernel& kernel, const Point& x,
              const GridField& density) {
  if (!(density.mass() > 0.0)) throw DomainError("drift_B: density has zero mass");
  const double w = density.cell_volume();
  Point interaction{};
  for (std::size_t k = 0; k < density.size(); ++k) {
    const Point y = density.node(k);
    interaction += (kernel_eval(kernel, x, y) * density[k] * w) * (x - y);
  }
  return params.lambda * (x - params.x0) + params.mu * interaction;
}

Point mean_exact(const ModelParams& params, const Point& u0, double t) noexcept {
  return params.x0 + std::exp(-params.lambda * t) * (u0 - params.x0);
}

double energy_bound(const ModelParams& params, const Point& u0, double energy0) noexcept {
  if (params.lambda <= 0.0) return std::numeric_limits<double>::infinity();
  const double u_max = std::max(norm(u0), norm(params.x0));
  const double forcing = params.dim * kappa_max(params) + params.lambda * norm(params.x0) * u_max +
                         params.mu * u_max * u_max;
  return std::max(energy0, forcing / (2.0 * params.lambda));
}

}  // namespace swarmkin
