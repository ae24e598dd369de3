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

#include "swarmkin/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swarmkin/error.hpp"

namespace swarmkin {

namespace {

void require_same_grid(const GridField& f, const GridField& g, const char* what) {
  if (!f.same_grid(g)) throw ConfigError(std::string(what) + ": fields live on different grids");
}

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("decay fit: abscissae are degenerate");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = y[k] - (intercept + slope * x[k]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

// Linear interpolation weight of coordinate v on `axis`: lower node and fraction.
std::pair<std::size_t, double> locate(const GridAxis& axis, double v) {
  const double s = (v - axis.lo) / axis.dx;
  const double last = static_cast<double>(axis.n - 1);
  const double tol = 1e-9;
  if (s < -tol || s > last + tol) throw DomainError("restriction: coarse node outside the fine grid");
  const double clamped = std::clamp(s, 0.0, last);
  auto i = static_cast<std::size_t>(std::floor(clamped));
  if (i >= axis.n - 1) i = axis.n - 2;
  return {i, clamped - static_cast<double>(i)};
}

}  // namespace

EntropyValue relative_entropy(const GridField& f, const GridField& g) {
  require_same_grid(f, g, "relative entropy");
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double fk = f[k];
    if (fk < 1e-300) continue;
    if (!(g[k] > 0.0)) return {std::numeric_limits<double>::infinity(), k};
    sum += fk * std::log(fk / g[k]);
  }
  return {sum * f.cell_volume(), std::nullopt};
}

double l1_distance(const GridField& f, const GridField& g) {
  require_same_grid(f, g, "L1 distance");
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += std::abs(f[k] - g[k]);
  return sum * f.cell_volume();
}

void DecaySeries::validate() const {
  if (times.size() != values.size()) throw DomainError("decay series: times and values differ in length");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(values[k]) || !std::isfinite(times[k])) throw DomainError("decay series: non-finite entry");
    if (k > 0 && !(times[k] > times[k - 1])) throw DomainError("decay series: times must increase strictly");
  }
}

DecayFit decay_rate_fit(const DecaySeries& series, double t0, double t1) {
  series.validate();
  std::vector<double> t, log_t, log_v;
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    const double tk = series.times[k];
    if (tk < t0 || tk > t1) continue;
    if (!(series.values[k] > 0.0)) throw DomainError("decay fit: nonpositive value inside the window");
    if (!(tk > 0.0)) throw DomainError("decay fit: power law needs positive times");
    t.push_back(tk);
    log_t.push_back(std::log(tk));
    log_v.push_back(std::log(series.values[k]));
  }
  if (t.size() < 3) throw DomainError("decay fit: fewer than 3 points in the window");
  const LineFit pw = least_squares(log_t, log_v);
  const LineFit ex = least_squares(t, log_v);
  DecayFit fit;
  fit.power = {-pw.slope, std::exp(pw.intercept), pw.rms};
  fit.exponential = {-ex.slope, std::exp(ex.intercept), ex.rms};
  fit.points = t.size();
  fit.t0 = t0;
  fit.t1 = t1;
  return fit;
}

DecayFit decay_rate_fit(const DecaySeries& series) {
  if (series.times.empty()) throw DomainError("decay fit: empty series");
  const double t_end = series.times.back();
  return decay_rate_fit(series, 0.5 * t_end, t_end);
}

MomentReport moment_report(const TrajectoryRecord& record, const ModelParams& params) {
  MomentReport report;
  if (record.empty()) return report;
  const Point u0 = record.mean.front();
  const double t_start = record.times.front();
  report.energy_bound = energy_bound(params, u0, record.energy.front());
  for (std::size_t k = 0; k < record.size(); ++k) {
    const double dev = norm(record.mean[k] - mean_exact(params, u0, record.times[k] - t_start));
    report.times.push_back(record.times[k]);
    report.mean_deviation.push_back(dev);
    report.max_mean_deviation = std::max(report.max_mean_deviation, dev);
    report.max_energy = std::max(report.max_energy, record.energy[k]);
  }
  report.energy_within_bound = report.max_energy <= report.energy_bound;
  return report;
}

GridField restrict_to(const GridField& fine, const GridAxis& coarse) {
  GridField out(coarse, fine.dim());
  const GridAxis& axis = fine.axis();
  if (fine.dim() == 1) {
    for (std::size_t i = 0; i < coarse.n; ++i) {
      const auto [k, a] = locate(axis, coarse.node(i));
      out[i] = (1.0 - a) * fine[k] + a * fine[k + 1];
    }
  } else {
    for (std::size_t j = 0; j < coarse.n; ++j) {
      const auto [l, b] = locate(axis, coarse.node(j));
      for (std::size_t i = 0; i < coarse.n; ++i) {
        const auto [k, a] = locate(axis, coarse.node(i));
        out.at(i, j) = (1.0 - b) * ((1.0 - a) * fine.at(k, l) + a * fine.at(k + 1, l)) +
                       b * ((1.0 - a) * fine.at(k, l + 1) + a * fine.at(k + 1, l + 1));
      }
    }
  }
  out.normalize();
  return out;
}

DecaySeries reference_solution_entropy(std::span<const FieldSnapshot> series, const GridField& fine_reference) {
  DecaySeries out;
  out.label = "H(f|f_ref)";
  if (series.empty()) return out;
  const GridField reference = restrict_to(fine_reference, series.front().field.axis());
  for (const auto& snap : series) {
    out.times.push_back(snap.time);
    out.values.push_back(relative_entropy(snap.field, reference).value);
  }
  return out;
}

}  // namespace swarmkin
