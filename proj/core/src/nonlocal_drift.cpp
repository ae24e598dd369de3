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

#include "swarmkin/nonlocal_drift.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>

#include "swarmkin/error.hpp"

namespace swarmkin {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::size_t interface_count(std::size_t n, int dim) { return dim == 1 ? n - 1 : (n - 1) * n; }

// Position of interface k of axis `along` without building an InterfaceField.
Point interface_location(const GridAxis& axis, int dim, int along, std::size_t k) {
  const std::size_t n = axis.n;
  if (along == 0) return {axis.interface(k % (n - 1)), dim == 2 ? axis.node(k / (n - 1)) : 0.0};
  return {axis.node(k % n), axis.interface(k / n)};
}

// Smallest length >= n whose only prime factors are 2, 3, 5 and 7.
std::size_t smooth_length(std::size_t n) {
  for (std::size_t len = n;; ++len) {
    std::size_t r = len;
    for (std::size_t p : {2u, 3u, 5u, 7u}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return len;
  }
}

}  // namespace

InterfaceField::InterfaceField(GridAxis axis, int dim) : axis_(axis), dim_(dim) {
  if (dim != 1 && dim != 2) throw ConfigError("interface field: dimension must be 1 or 2");
  if (axis.n < 2) throw ConfigError("interface field: at least two nodes per axis are required");
  for (int a = 0; a < dim; ++a) values_[a].assign(interface_count(axis.n, dim), 0.0);
}

Point InterfaceField::location(int along, std::size_t k) const noexcept {
  return interface_location(axis_, dim_, along, k);
}

std::array<std::size_t, 2> InterfaceField::neighbors(int along, std::size_t k) const noexcept {
  const std::size_t n = axis_.n;
  if (along == 0) {
    const std::size_t i = k % (n - 1);
    const std::size_t j = k / (n - 1);
    return {j * n + i, j * n + i + 1};
  }
  return {k, k + n};
}

struct NonlocalDrift::Fft {
  std::size_t len = 0;   // padded length per axis
  std::size_t half = 0;  // len / 2 + 1
  int dim = 1;
  double* real = nullptr;
  fftw_complex* spectrum = nullptr;
  fftw_complex* product = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::array<std::vector<std::complex<double>>, 2> kernel_hat;

  Fft(const GridAxis& axis, int dim_, const InteractionKernel& kernel) : dim(dim_) {
    const std::size_t n = axis.n;
    // Offsets span at most 2n - 1 values per axis, so this length avoids wrap-around.
    len = smooth_length(2 * n - 1);
    half = len / 2 + 1;
    const std::size_t real_size = dim == 1 ? len : len * len;
    const std::size_t complex_size = dim == 1 ? half : len * half;
    real = fftw_alloc_real(real_size);
    spectrum = fftw_alloc_complex(complex_size);
    product = fftw_alloc_complex(complex_size);
    {
      std::lock_guard lock(planner_mutex());
      const int l = static_cast<int>(len);
      if (dim == 1) {
        forward = fftw_plan_dft_r2c_1d(l, real, spectrum, FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_1d(l, product, real, FFTW_ESTIMATE);
      } else {
        forward = fftw_plan_dft_r2c_2d(l, l, real, spectrum, FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_2d(l, l, product, real, FFTW_ESTIMATE);
      }
    }
    if (!forward || !backward) throw Error("FFT planning failed");

    // Kernel samples G(r) = P(|r|^2) r_a at every node-to-interface offset,
    // stored at their wrapped circular positions.
    const double dx = axis.dx;
    const auto wrap = [this](long long m) {
      return static_cast<std::size_t>(m < 0 ? m + static_cast<long long>(len) : m);
    };
    const long long nn = static_cast<long long>(n);
    for (int along = 0; along < dim; ++along) {
      std::fill(real, real + real_size, 0.0);
      if (dim == 1) {
        for (long long m = -(nn - 1); m <= nn - 2; ++m) {
          const double r = (static_cast<double>(m) + 0.5) * dx;
          real[wrap(m)] = kernel_weight(kernel, r * r) * r;
        }
      } else {
        const long long mx_hi = along == 0 ? nn - 2 : nn - 1;
        const long long my_hi = along == 1 ? nn - 2 : nn - 1;
        const double sx = along == 0 ? 0.5 : 0.0;
        const double sy = along == 1 ? 0.5 : 0.0;
        for (long long my = -(nn - 1); my <= my_hi; ++my) {
          for (long long mx = -(nn - 1); mx <= mx_hi; ++mx) {
            const double rx = (static_cast<double>(mx) + sx) * dx;
            const double ry = (static_cast<double>(my) + sy) * dx;
            real[wrap(my) * len + wrap(mx)] = kernel_weight(kernel, rx * rx + ry * ry) * (along == 0 ? rx : ry);
          }
        }
      }
      fftw_execute(forward);
      auto& hat = kernel_hat[along];
      hat.resize(complex_size);
      for (std::size_t k = 0; k < complex_size; ++k) hat[k] = {spectrum[k][0], spectrum[k][1]};
    }
  }

  ~Fft() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spectrum);
    fftw_free(product);
  }

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  void convolve(const GridField& density, int along, std::span<double> out) {
    const std::size_t n = density.nx();
    const double w = density.cell_volume();
    const std::size_t real_size = dim == 1 ? len : len * len;
    const std::size_t complex_size = dim == 1 ? half : len * half;
    std::fill(real, real + real_size, 0.0);
    if (dim == 1) {
      for (std::size_t i = 0; i < n; ++i) real[i] = density[i] * w;
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) real[j * len + i] = density.at(i, j) * w;
      }
    }
    fftw_execute(forward);
    const auto& hat = kernel_hat[along];
    for (std::size_t k = 0; k < complex_size; ++k) {
      const std::complex<double> p = std::complex<double>(spectrum[k][0], spectrum[k][1]) * hat[k];
      product[k][0] = p.real();
      product[k][1] = p.imag();
    }
    fftw_execute(backward);
    const double scale = 1.0 / static_cast<double>(real_size);
    if (dim == 1) {
      for (std::size_t i = 0; i + 1 < n; ++i) out[i] = real[i] * scale;
    } else if (along == 0) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i + 1 < n; ++i) out[j * (n - 1) + i] = real[j * len + i] * scale;
      }
    } else {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) out[j * n + i] = real[j * len + i] * scale;
      }
    }
  }
};

NonlocalDrift::NonlocalDrift(GridAxis axis, int dim, InteractionKernel kernel, DriftRoute route)
    : axis_(axis), dim_(dim), kernel_(kernel), route_(route) {
  if (dim != 1 && dim != 2) throw ConfigError("nonlocal drift: dimension must be 1 or 2");
  if (axis.n < 2) throw ConfigError("nonlocal drift: at least two nodes per axis are required");
  if (route_ == DriftRoute::automatic) route_ = is_uniform(kernel_) ? DriftRoute::closed_form : DriftRoute::fft;
  if (route_ == DriftRoute::closed_form && !is_uniform(kernel_)) {
    throw ConfigError("nonlocal drift: the closed-form route needs the uniform kernel");
  }
  if (route_ == DriftRoute::fft) fft_ = std::make_unique<Fft>(axis_, dim_, kernel_);
}

NonlocalDrift::~NonlocalDrift() = default;
NonlocalDrift::NonlocalDrift(NonlocalDrift&&) noexcept = default;
NonlocalDrift& NonlocalDrift::operator=(NonlocalDrift&&) noexcept = default;

void NonlocalDrift::interaction(const GridField& density, int along, std::span<double> out) {
  if (density.axis() != axis_ || density.dim() != dim_) throw ConfigError("nonlocal drift: grid mismatch");
  if (along < 0 || along >= dim_) throw ConfigError("nonlocal drift: axis out of range");
  if (out.size() != interface_count(axis_.n, dim_)) throw ConfigError("nonlocal drift: output size mismatch");
  switch (route_) {
    case DriftRoute::automatic:
    case DriftRoute::closed_form:
      uniform(density, along, out);
      break;
    case DriftRoute::direct:
      direct(density, along, out);
      break;
    case DriftRoute::fft:
      fft_->convolve(density, along, out);
      break;
  }
}

void NonlocalDrift::uniform(const GridField& density, int along, std::span<double> out) const {
  // sum_y (x - y) f(y) dy = x * mass - first moment
  const double mass = density.mass();
  const double moment = density.first_moment()[along];
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = interface_location(axis_, dim_, along, k)[along] * mass - moment;
}

void NonlocalDrift::direct(const GridField& density, int along, std::span<double> out) const {
  const double w = density.cell_volume();
  const std::size_t nodes = density.size();
  std::vector<Point> ys(nodes);
  for (std::size_t k = 0; k < nodes; ++k) ys[k] = density.node(k);
  const long long count = static_cast<long long>(out.size());
#pragma omp parallel for schedule(static)
  for (long long kk = 0; kk < count; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    const Point x = interface_location(axis_, dim_, along, k);
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes; ++q) {
      const Point r = x - ys[q];
      sum += kernel_weight(kernel_, norm2(r)) * r[along] * density[q];
    }
    out[k] = sum * w;
  }
}

InterfaceField nonlocal_drift_on_grid(const GridField& density, const InteractionKernel& kernel,
                                      const ModelParams& params, DriftRoute route) {
  if (!(density.mass() > 0.0)) throw DomainError("nonlocal drift: density has zero mass");
  InterfaceField out(density.axis(), density.dim());
  NonlocalDrift evaluator(density.axis(), density.dim(), kernel, route);
  for (int along = 0; along < density.dim(); ++along) {
    auto values = out.values(along);
    if (params.mu != 0.0) evaluator.interaction(density, along, values);
    for (std::size_t k = 0; k < values.size(); ++k) {
      const double relax = params.lambda * (out.location(along, k)[along] - params.x0[along]);
      values[k] = relax + params.mu * values[k];
    }
  }
  return out;
}

}  // namespace swarmkin
