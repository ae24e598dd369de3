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

#include "swarmkin/app/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "swarmkin/app/csv.hpp"
#include "swarmkin/diagnostics.hpp"
#include "swarmkin/equilibrium.hpp"
#include "swarmkin/error.hpp"
#include "swarmkin/fp_solver.hpp"
#include "swarmkin/particles.hpp"

#ifndef SWARMKIN_VERSION
#define SWARMKIN_VERSION "unknown"
#endif

namespace swarmkin::app {

namespace fs = std::filesystem;

const char* version() { return SWARMKIN_VERSION; }

namespace {

std::vector<std::string> coordinate_names(const std::string& prefix, int dim) {
  std::vector<std::string> out{prefix + "1"};
  if (dim == 2) out.push_back(prefix + "2");
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void push_point(std::vector<double>& row, const Point& p, int dim) {
  row.push_back(p.x);
  if (dim == 2) row.push_back(p.y);
}

Equation equation_for(ParticleModel model) {
  return model == ParticleModel::discontinuous ? Equation::discontinuous : Equation::surrogate;
}

std::vector<double> default_times(const std::vector<double>& given, double t_end) {
  if (!given.empty()) return given;
  return {0.0, t_end};
}

// Run directory plus the list of what has been written into it.
class Session {
 public:
  Session(const ExperimentConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log), dir_(cfg.output) {
    fs::create_directories(dir_);
    manifest_.directory = dir_.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void add(const std::string& name, ArtifactKind kind, const std::string& label) {
    manifest_.files.push_back({name, kind, label, cfg_.model.dim});
  }

  std::ostream& log() { return log_; }
  Manifest& manifest() { return manifest_; }

  void write_density(const std::string& name, const std::vector<FieldSnapshot>& snapshots, const std::string& label) {
    const int dim = cfg_.model.dim;
    CsvWriter csv(path(name), concat(concat({"t"}, coordinate_names("x", dim)), {"f"}));
    std::vector<double> row;
    for (const auto& s : snapshots) {
      for (std::size_t k = 0; k < s.field.size(); ++k) {
        row.assign({s.time});
        push_point(row, s.field.node(k), dim);
        row.push_back(s.field[k]);
        csv.row(row);
      }
    }
    csv.close();
    add(name, ArtifactKind::density, label);
  }

  void write_steady(const std::string& name, const GridField& field, const std::string& label) {
    const int dim = field.dim();
    CsvWriter csv(path(name), concat(coordinate_names("x", dim), {"f"}));
    std::vector<double> row;
    for (std::size_t k = 0; k < field.size(); ++k) {
      row.clear();
      push_point(row, field.node(k), dim);
      row.push_back(field[k]);
      csv.row(row);
    }
    csv.close();
    add(name, ArtifactKind::steady_state, label);
  }

  void write_field_series(const std::string& name, const TrajectoryRecord& record, const std::string& label) {
    const int dim = cfg_.model.dim;
    CsvWriter csv(path(name), concat(concat({"t", "mass"}, coordinate_names("mean", dim)), {"energy", "entropy"}));
    std::vector<double> row;
    for (std::size_t k = 0; k < record.size(); ++k) {
      row.assign({record.times[k], record.mass[k]});
      push_point(row, record.mean[k], dim);
      row.push_back(record.energy[k]);
      row.push_back(k < record.entropy.size() ? record.entropy[k] : std::nan(""));
      csv.row(row);
    }
    csv.close();
    add(name, ArtifactKind::field_series, label);
  }

  void write_trajectory(const std::string& name, const TrajectoryRecord& record, const std::string& label) {
    const int dim = cfg_.model.dim;
    CsvWriter csv(path(name), concat(concat({"t"}, coordinate_names("u", dim)), {"E"}));
    std::vector<double> row;
    for (std::size_t k = 0; k < record.size(); ++k) {
      row.assign({record.times[k]});
      push_point(row, record.mean[k], dim);
      row.push_back(record.energy[k]);
      csv.row(row);
    }
    csv.close();
    add(name, ArtifactKind::trajectory, label);
  }

  void write_particles(const std::string& name, const std::vector<Point>& positions, const std::string& label) {
    const int dim = cfg_.model.dim;
    CsvWriter csv(path(name), concat({"index"}, coordinate_names("x", dim)));
    std::vector<double> row;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      row.assign({static_cast<double>(i)});
      push_point(row, positions[i], dim);
      csv.row(row);
    }
    csv.close();
    add(name, ArtifactKind::particles, label);
  }

  void write_decay(const std::string& name, const DecaySeries& series) {
    CsvWriter csv(path(name), {"t", "value"});
    for (std::size_t k = 0; k < series.times.size(); ++k) csv.row({series.times[k], series.values[k]});
    csv.close();
    add(name, ArtifactKind::decay, series.label);
  }

  void write_text(const std::string& name, const std::string& text, ArtifactKind kind, const std::string& label) {
    std::ofstream out(path(name));
    if (!out) throw std::runtime_error("cannot write " + path(name));
    out << text;
    add(name, kind, label);
  }

 private:
  const ExperimentConfig& cfg_;
  std::ostream& log_;
  fs::path dir_;
  Manifest manifest_;
};

GridField initial_field(const ExperimentConfig& cfg, const GridAxis& axis) {
  return discretize_mixture(cfg.initial.components, axis, cfg.model.dim);
}

// Stationary density of the uniform-kernel dynamics, normalized on the grid.
GridField steady_field(const ModelParams& params, const GridAxis& axis) {
  const auto profile = EquilibriumProfile::from_sigma2(params.sigma2, params.delta, params.dim, params.x0);
  GridField f = discretize_f_infty(profile, axis);
  f.normalize();
  return f;
}

FpConfig fp_config(const FpSettings& s, Equation equation) {
  FpConfig c;
  c.equation = equation;
  c.integrator = s.integrator;
  c.dt = s.dt;
  c.t_end = s.t_end;
  c.record_every = s.record_every;
  c.snapshot_times = default_times(s.snapshot_times, s.t_end);
  c.safety = s.safety;
  return c;
}

SdeConfig sde_config(const ExperimentConfig& cfg, ParticleModel model) {
  SdeConfig c;
  c.dt = cfg.particles.dt;
  c.t_end = cfg.particles.t_end;
  c.model = model;
  c.kernel = cfg.kernel;
  c.record_every = cfg.particles.record_every;
  c.snapshot_times = default_times(cfg.particles.snapshot_times, cfg.particles.t_end);
  return c;
}

std::string fit_report(const DecayFit& fit) {
  std::string out;
  out += "window: [" + format_double(fit.t0) + ", " + format_double(fit.t1) + "]\n";
  out += "points: " + std::to_string(fit.points) + "\n";
  out += "power_law:\n";
  out += "  exponent: " + format_double(fit.power.exponent) + "\n";
  out += "  prefactor: " + format_double(fit.power.prefactor) + "\n";
  out += "  residual: " + format_double(fit.power.residual) + "\n";
  out += "exponential:\n";
  out += "  rate: " + format_double(fit.exponential.rate) + "\n";
  out += "  prefactor: " + format_double(fit.exponential.prefactor) + "\n";
  out += "  residual: " + format_double(fit.exponential.residual) + "\n";
  return out;
}

void run_equilibrium(const ExperimentConfig& cfg, Session& s) {
  const auto& m = cfg.model;
  const auto profile = cfg.inner_mass ? EquilibriumProfile::from_inner_mass(*cfg.inner_mass, m.delta, m.dim, m.x0)
                                      : EquilibriumProfile::from_sigma2(m.sigma2, m.delta, m.dim, m.x0);
  std::string text;
  text += "dim: " + std::to_string(profile.dim) + "\n";
  text += "delta: " + format_double(profile.delta) + "\n";
  text += "m1: " + format_double(profile.m1) + "\n";
  text += "m2: " + format_double(profile.m2) + "\n";
  text += "sigma2: " + format_double(profile.sigma2) + "\n";
  s.log() << text;
  s.write_text("equilibrium.txt", text, ArtifactKind::report, "stationary constants");
  s.write_steady("steady_state.csv", discretize_f_infty(profile, cfg.grid.axis()), "stationary density");
}

void run_particles(const ExperimentConfig& cfg, Session& s) {
  const auto axis = cfg.grid.axis();
  for (auto model : cfg.particles.models) {
    const auto name = to_string(model);
    s.log() << "particles: " << name << ", N = " << cfg.particles.n << "\n";
    auto ens = sample_initial_mixture(cfg.initial.components, cfg.model.dim, cfg.particles.n, cfg.seed);
    const auto result = run(std::move(ens), cfg.model, sde_config(cfg, model));
    s.write_trajectory("particles_" + name + "_trajectory.csv", result.record, name + " mean and energy");
    std::vector<FieldSnapshot> hists;
    for (const auto& snap : result.snapshots) {
      s.write_particles("particles_" + name + "_t" + format_double(snap.time) + ".csv", snap.positions,
                        name + " positions");
      hists.push_back({snap.time, histogram(snap.positions, cfg.model.dim, HistogramSpec::centered_on(axis)).density});
    }
    s.write_density("particles_" + name + "_histograms.csv", hists, name + " histogram");
  }
}

void run_fp(const ExperimentConfig& cfg, Session& s) {
  const auto axis = cfg.grid.axis();
  const auto initial = initial_field(cfg, axis);
  std::optional<GridField> steady;
  if (is_uniform(cfg.kernel)) {
    steady = steady_field(cfg.model, axis);
    s.write_steady("steady_state.csv", *steady, "normalized stationary density");
  }
  for (auto eq : cfg.fp.equations) {
    const auto name = to_string(eq);
    s.log() << "fp: " << name << " equation, " << to_string(cfg.fp.integrator) << "\n";
    const auto result = solve(initial, fp_config(cfg.fp, eq), cfg.model, cfg.kernel, steady ? &*steady : nullptr);
    s.write_field_series("fp_" + name + "_series.csv", result.record, name + " moments");
    s.write_density("fp_" + name + "_fields.csv", result.snapshots, name + " density");
  }
}

void run_compare(const ExperimentConfig& cfg, Session& s) {
  const auto axis = cfg.grid.axis();
  const int dim = cfg.model.dim;
  const auto initial = initial_field(cfg, axis);
  std::optional<GridField> steady;
  if (is_uniform(cfg.kernel)) {
    steady = steady_field(cfg.model, axis);
    s.write_steady("steady_state.csv", *steady, "normalized stationary density");
  }
  std::vector<std::string> header{"model", "t"};
  if (dim == 1) {
    header.insert(header.end(), {"l1_pde", "l1_steady"});
  } else {
    header.insert(header.end(), {"l1_pde_x1", "l1_pde_x2", "l1_steady_x1", "l1_steady_x2"});
  }
  CsvWriter table(s.path("compare_l1.csv"), header);
  for (auto model : cfg.particles.models) {
    const auto name = to_string(model);
    s.log() << "compare: " << name << ", N = " << cfg.particles.n << "\n";
    const auto sde = sde_config(cfg, model);
    auto ens = sample_initial_mixture(cfg.initial.components, dim, cfg.particles.n, cfg.seed);
    const auto particles = run(std::move(ens), cfg.model, sde);

    auto fc = fp_config(cfg.fp, equation_for(model));
    fc.t_end = cfg.particles.t_end;
    fc.snapshot_times = sde.snapshot_times;
    const auto pde = solve(initial, fc, cfg.model, cfg.kernel);

    std::vector<FieldSnapshot> hists;
    for (const auto& snap : particles.snapshots) {
      hists.push_back({snap.time, histogram(snap.positions, dim, HistogramSpec::centered_on(axis)).density});
    }
    s.write_density("compare_" + name + "_histograms.csv", hists, name + " histogram");
    s.write_density("compare_" + name + "_pde.csv", pde.snapshots, name + " grid solution");

    const std::vector<std::string> label{name};
    for (const auto& h : hists) {
      const FieldSnapshot* match = nullptr;
      for (const auto& p : pde.snapshots) {
        if (std::abs(p.time - h.time) <= 1e-9 * std::max(1.0, h.time)) match = &p;
      }
      if (!match) continue;
      std::vector<double> row{h.time};
      std::vector<double> to_steady;
      for (int a = 0; a < dim; ++a) {
        const auto hm = marginal(h.field, a);
        row.push_back(l1_distance(hm, marginal(match->field, a)));
        to_steady.push_back(steady ? l1_distance(hm, marginal(*steady, a)) : std::nan(""));
      }
      row.insert(row.end(), to_steady.begin(), to_steady.end());
      table.row(label, row);
      s.log() << "  t = " << format_double(h.time) << ": L1 to grid solution " << format_double(row[1]) << "\n";
    }
  }
  table.close();
  s.add("compare_l1.csv", ArtifactKind::distances, "histogram distances");
}

void run_entropy(const ExperimentConfig& cfg, Session& s, const RunOptions& options) {
  const auto axis = cfg.grid.axis();
  const int dim = cfg.model.dim;
  const auto& e = cfg.entropy;
  const auto window = options.fit_window ? options.fit_window : e.fit_window;
  const auto initial = initial_field(cfg, axis);
  CsvWriter summary(s.path("entropy_fits.csv"),
                    {"equation", "lambda", "exponent", "power_residual", "rate", "exponential_residual", "points"});
  for (auto eq : cfg.fp.equations) {
    for (double lambda : e.lambdas) {
      ModelParams params = cfg.model;
      params.lambda = lambda;
      params.mu = 1.0 - lambda;
      const auto stem = "entropy_" + to_string(eq) + "_lambda" + format_double(lambda);
      s.log() << "entropy: " << to_string(eq) << ", lambda = " << format_double(lambda) << "\n";
      auto fc = fp_config(cfg.fp, eq);
      DecaySeries series;
      series.label = to_string(eq) + ", lambda = " + format_double(lambda);
      if (e.reference == EntropyReference::analytic) {
        const auto steady = steady_field(params, axis);
        const auto result = solve(initial, fc, params, cfg.kernel, &steady);
        series.times = result.record.times;
        series.values = result.record.entropy;
      } else {
        const auto fine_axis = GridAxis::from_bounds(cfg.grid.lo, cfg.grid.hi, e.reference_nx);
        FpConfig rc = fc;
        rc.integrator = Integrator::rk4;
        rc.dt = e.reference_safety * stability_limit(eq, params, fine_axis, dim);
        rc.t_end = e.reference_t_end;
        rc.record_every = step_count(rc.t_end, rc.dt);
        rc.snapshot_times.clear();
        s.log() << "  reference: nx = " << e.reference_nx << ", T = " << format_double(rc.t_end) << "\n";
        const auto reference = solve(discretize_mixture(cfg.initial.components, fine_axis, dim), rc, params, cfg.kernel);
        s.write_density(stem + "_reference.csv", {{rc.t_end, reference.final_field}}, "reference solution");
        if (cfg.fp.snapshot_times.empty()) {
          constexpr int kSamples = 40;
          fc.snapshot_times.clear();
          for (int k = 1; k <= kSamples; ++k) fc.snapshot_times.push_back(fc.t_end * k / kSamples);
        }
        const auto result = solve(initial, fc, params, cfg.kernel);
        const auto h = reference_solution_entropy(result.snapshots, reference.final_field);
        series.times = h.times;
        series.values = h.values;
      }
      s.write_decay(stem + ".csv", series);
      std::string report = "series: " + series.label + "\n";
      std::vector<double> row{lambda};
      try {
        const auto fit = window ? decay_rate_fit(series, window->first, window->second) : decay_rate_fit(series);
        report += fit_report(fit);
        row.insert(row.end(), {fit.power.exponent, fit.power.residual, fit.exponential.rate, fit.exponential.residual,
                               static_cast<double>(fit.points)});
        s.log() << "  rate " << format_double(fit.exponential.rate) << ", exponent "
                << format_double(fit.power.exponent) << "\n";
      } catch (const DomainError& err) {
        report += std::string("fit unavailable: ") + err.what() + "\n";
        row.insert(row.end(), 4, std::nan(""));
        row.push_back(0.0);
        s.log() << "  " << err.what() << "\n";
      }
      s.write_text(stem + "_fit.txt", report, ArtifactKind::report, series.label + " fit");
      const std::vector<std::string> label{to_string(eq)};
      summary.row(label, row);
    }
  }
  summary.close();
  s.add("entropy_fits.csv", ArtifactKind::report, "decay fits");
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Manifest run_experiment(const ExperimentConfig& config, std::ostream& log, const RunOptions& options) {
  if (auto errors = validate(config); !errors.empty()) throw ConfigErrors(std::move(errors));
  Session s(config, log);
  switch (config.kind) {
    case ExperimentKind::equilibrium: run_equilibrium(config, s); break;
    case ExperimentKind::particles: run_particles(config, s); break;
    case ExperimentKind::fp: run_fp(config, s); break;
    case ExperimentKind::compare: run_compare(config, s); break;
    case ExperimentKind::entropy: run_entropy(config, s, options); break;
  }
  std::string meta = "# swarmkin " + std::string(version()) + "\n";
  if (!options.omit_timestamp) meta += "# written " + utc_timestamp() + "\n";
  meta += "# rerun with: swarmkin " + to_string(config.kind) + " --config run.yaml\n";
  meta += write_config(config);
  s.write_text("run.yaml", meta, ArtifactKind::metadata, "resolved configuration");
  s.add("plot.py", ArtifactKind::plot_script, "figures");
  s.add("manifest.txt", ArtifactKind::metadata, "file list");
  auto& manifest = s.manifest();
  {
    std::ofstream out(s.path("plot.py"));
    out << emit_plot_script(manifest);
  }
  {
    std::ofstream out(s.path("manifest.txt"));
    out << manifest_text(manifest);
  }
  log << "wrote " << manifest.files.size() << " files to " << manifest.directory << "\n";
  return manifest;
}

}  // namespace swarmkin::app
