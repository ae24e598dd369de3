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

#include "swarmkin/app/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "swarmkin/app/csv.hpp"
#include "swarmkin/equilibrium.hpp"
#include "swarmkin/error.hpp"

namespace swarmkin::app {

namespace {

const char* const kKernelNames = "uniform, cucker_smale";

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? ", " : "") + items[k];
  return out;
}

// Walks a YAML tree and collects every problem instead of stopping at the first.
class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const YAML::Node& near, const std::string& path, const std::string& message) {
    std::string where;
    if (near.IsDefined() && near.Mark().line >= 0) where = " (line " + std::to_string(near.Mark().line + 1) + ")";
    errors.push_back(path + ": " + message + where);
  }

  bool is_map(const YAML::Node& node, const std::string& path) {
    if (!node.IsMap()) {
      fail(node, path, "expected a mapping");
      return false;
    }
    return true;
  }

  void allow_keys(const YAML::Node& node, const std::string& path, std::set<std::string> allowed) {
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) {
        std::vector<std::string> names(allowed.begin(), allowed.end());
        fail(kv.first, join_path(path, key), "unknown key; expected one of " + join(names));
      }
    }
  }

  static std::string join_path(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  template <class T>
  std::optional<T> get(const YAML::Node& parent, const std::string& path, const std::string& key,
                       const char* expected) {
    const YAML::Node node = parent[key];
    if (!node.IsDefined()) return std::nullopt;
    try {
      if (!node.IsScalar()) throw YAML::Exception(node.Mark(), "not a scalar");
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, join_path(path, key), std::string("expected ") + expected);
      return std::nullopt;
    }
  }

  std::optional<double> number(const YAML::Node& parent, const std::string& path, const std::string& key) {
    auto v = get<double>(parent, path, key, "a number");
    if (v && !std::isfinite(*v)) {
      fail(parent[key], join_path(path, key), "must be finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::size_t> count(const YAML::Node& parent, const std::string& path, const std::string& key) {
    auto v = get<long long>(parent, path, key, "a nonnegative integer");
    if (v && *v < 0) {
      fail(parent[key], join_path(path, key), "expected a nonnegative integer");
      return std::nullopt;
    }
    return v ? std::optional<std::size_t>(static_cast<std::size_t>(*v)) : std::nullopt;
  }

  std::optional<std::vector<double>> numbers(const YAML::Node& parent, const std::string& path,
                                             const std::string& key) {
    const YAML::Node node = parent[key];
    if (!node.IsDefined()) return std::nullopt;
    if (!node.IsSequence()) {
      fail(node, join_path(path, key), "expected a list of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < node.size(); ++k) {
      try {
        out.push_back(node[k].as<double>());
      } catch (const YAML::Exception&) {
        fail(node[k], join_path(path, key) + "[" + std::to_string(k) + "]", "expected a number");
        return std::nullopt;
      }
    }
    return out;
  }

  // A single name or a list of names.
  std::optional<std::vector<std::string>> names(const YAML::Node& parent, const std::string& path,
                                                const std::string& key) {
    const YAML::Node node = parent[key];
    if (!node.IsDefined()) return std::nullopt;
    std::vector<std::string> out;
    try {
      if (node.IsScalar()) {
        out.push_back(node.as<std::string>());
      } else if (node.IsSequence()) {
        for (const auto& item : node) out.push_back(item.as<std::string>());
      } else {
        throw YAML::Exception(node.Mark(), "bad");
      }
    } catch (const YAML::Exception&) {
      fail(node, join_path(path, key), "expected a name or a list of names");
      return std::nullopt;
    }
    return out;
  }
};

std::optional<ParticleModel> parse_model(const std::string& name) {
  if (name == "discontinuous") return ParticleModel::discontinuous;
  if (name == "surrogate") return ParticleModel::surrogate;
  return std::nullopt;
}

std::optional<Equation> parse_equation(const std::string& name) {
  if (name == "discontinuous") return Equation::discontinuous;
  if (name == "surrogate") return Equation::surrogate;
  if (name == "nonlocal") return Equation::nonlocal;
  return std::nullopt;
}

Point point_of(const std::vector<double>& v) { return {v.empty() ? 0.0 : v[0], v.size() > 1 ? v[1] : 0.0}; }

void read_model(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const std::string path = "model";
  const YAML::Node node = root[path];
  if (!node.IsDefined()) {
    r.fail(root, path, "missing section");
    return;
  }
  if (!r.is_map(node, path)) return;
  r.allow_keys(node, path, {"dim", "lambda", "mu", "sigma2", "inner_mass", "delta", "x0"});
  ModelParams& m = cfg.model;
  if (auto d = r.count(node, path, "dim")) m.dim = static_cast<int>(*d);
  if (auto v = r.number(node, path, "lambda")) {
    m.lambda = *v;
  } else if (!node["lambda"].IsDefined()) {
    r.fail(node, "model.lambda", "missing key");
  }
  m.mu = r.number(node, path, "mu").value_or(1.0 - m.lambda);
  if (auto v = r.number(node, path, "delta")) {
    m.delta = *v;
  } else if (!node["delta"].IsDefined()) {
    r.fail(node, "model.delta", "missing key");
  }
  if (auto x0 = r.numbers(node, path, "x0")) {
    if (static_cast<int>(x0->size()) != m.dim) {
      r.fail(node["x0"], "model.x0", "expected " + std::to_string(m.dim) + " coordinates");
    } else {
      m.x0 = point_of(*x0);
    }
  }
  const auto sigma2 = r.number(node, path, "sigma2");
  cfg.inner_mass = r.number(node, path, "inner_mass");
  if (sigma2 && cfg.inner_mass) {
    r.fail(node, "model.sigma2", "give either sigma2 or inner_mass, not both");
  } else if (sigma2) {
    m.sigma2 = *sigma2;
  } else if (cfg.inner_mass) {
    try {
      if (!(m.delta > 0.0)) throw DomainError("delta must be positive");
      m.sigma2 = m.dim == 2 ? solve_constants_2d(*cfg.inner_mass, m.delta).sigma2
                            : solve_constants_1d(*cfg.inner_mass, m.delta).sigma2;
    } catch (const Error& e) {
      r.fail(node["inner_mass"], "model.inner_mass", e.what());
    }
  } else if (!node["sigma2"].IsDefined() && !node["inner_mass"].IsDefined()) {
    r.fail(node, "model", "missing key sigma2 (or inner_mass)");
  }
}

void read_kernel(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const YAML::Node node = root["kernel"];
  if (!node.IsDefined()) return;
  if (node.IsScalar()) {
    const auto name = node.as<std::string>();
    if (name == "uniform") {
      cfg.kernel = UniformKernel{};
    } else if (name == "cucker_smale") {
      cfg.kernel = CuckerSmaleKernel{1.0};
    } else {
      r.fail(node, "kernel", "unknown kernel '" + name + "'; valid kernels: " + kKernelNames);
    }
    return;
  }
  if (!r.is_map(node, "kernel")) return;
  r.allow_keys(node, "kernel", {"type", "gamma"});
  const auto type = r.get<std::string>(node, "kernel", "type", "a kernel name").value_or("uniform");
  const auto gamma = r.number(node, "kernel", "gamma");
  if (type == "uniform") {
    cfg.kernel = UniformKernel{};
    if (gamma) r.fail(node["gamma"], "kernel.gamma", "only the cucker_smale kernel takes gamma");
  } else if (type == "cucker_smale") {
    cfg.kernel = CuckerSmaleKernel{gamma.value_or(1.0)};
  } else {
    r.fail(node["type"], "kernel.type", "unknown kernel '" + type + "'; valid kernels: " + kKernelNames);
  }
}

void read_initial(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const YAML::Node node = root["initial"];
  if (!node.IsDefined()) {
    if (cfg.kind != ExperimentKind::equilibrium) r.fail(root, "initial", "missing section");
    return;
  }
  if (node.IsScalar()) {
    cfg.initial.preset = node.as<std::string>();
  } else if (r.is_map(node, "initial")) {
    r.allow_keys(node, "initial", {"preset", "components"});
    if (auto p = r.get<std::string>(node, "initial", "preset", "a preset name")) cfg.initial.preset = *p;
    const YAML::Node list = node["components"];
    if (list.IsDefined()) {
      if (!cfg.initial.preset.empty()) r.fail(list, "initial", "give either preset or components, not both");
      if (!list.IsSequence() || list.size() == 0) {
        r.fail(list, "initial.components", "expected a nonempty list");
        return;
      }
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string path = "initial.components[" + std::to_string(k) + "]";
        if (!r.is_map(list[k], path)) continue;
        r.allow_keys(list[k], path, {"weight", "mean", "variance"});
        MixtureComponent c;
        c.weight = r.number(list[k], path, "weight").value_or(0.0);
        c.variance = r.number(list[k], path, "variance").value_or(0.0);
        const auto mean = r.numbers(list[k], path, "mean");
        if (!mean || static_cast<int>(mean->size()) != cfg.model.dim) {
          r.fail(list[k], path + ".mean", "expected " + std::to_string(cfg.model.dim) + " coordinates");
        } else {
          c.mean = point_of(*mean);
        }
        cfg.initial.components.push_back(c);
      }
      return;
    }
  } else {
    return;
  }
  if (cfg.initial.preset.empty()) {
    r.fail(node, "initial", "expected preset or components");
    return;
  }
  if (auto comps = preset_components(cfg.initial.preset)) {
    cfg.initial.components = *comps;
  } else {
    r.fail(node, "initial.preset", "unknown preset '" + cfg.initial.preset + "'; valid presets: " + join(preset_names()));
  }
}

void read_grid(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const YAML::Node node = root["grid"];
  if (!node.IsDefined() || !r.is_map(node, "grid")) return;
  r.allow_keys(node, "grid", {"lo", "hi", "nx"});
  if (auto v = r.number(node, "grid", "lo")) cfg.grid.lo = *v;
  if (auto v = r.number(node, "grid", "hi")) cfg.grid.hi = *v;
  if (auto v = r.count(node, "grid", "nx")) cfg.grid.nx = *v;
}

void read_particles(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const std::string path = "particles";
  const YAML::Node node = root[path];
  if (!node.IsDefined() || !r.is_map(node, path)) return;
  r.allow_keys(node, path, {"n", "dt", "t_end", "models", "record_every", "snapshot_times"});
  auto& p = cfg.particles;
  if (auto v = r.count(node, path, "n")) p.n = *v;
  if (auto v = r.number(node, path, "dt")) p.dt = *v;
  if (auto v = r.number(node, path, "t_end")) p.t_end = *v;
  if (auto v = r.count(node, path, "record_every")) p.record_every = *v;
  if (auto v = r.numbers(node, path, "snapshot_times")) p.snapshot_times = *v;
  if (auto names = r.names(node, path, "models")) {
    p.models.clear();
    for (const auto& name : *names) {
      if (auto m = parse_model(name)) {
        p.models.push_back(*m);
      } else {
        r.fail(node["models"], "particles.models", "unknown model '" + name + "'; valid models: discontinuous, surrogate");
      }
    }
  }
}

void read_fp(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const std::string path = "fp";
  const YAML::Node node = root[path];
  if (!node.IsDefined() || !r.is_map(node, path)) return;
  r.allow_keys(node, path, {"equations", "integrator", "dt", "t_end", "record_every", "snapshot_times", "safety"});
  auto& f = cfg.fp;
  if (auto v = r.number(node, path, "dt")) f.dt = *v;
  if (auto v = r.number(node, path, "t_end")) f.t_end = *v;
  if (auto v = r.count(node, path, "record_every")) f.record_every = *v;
  if (auto v = r.numbers(node, path, "snapshot_times")) f.snapshot_times = *v;
  if (auto v = r.number(node, path, "safety")) f.safety = *v;
  if (auto name = r.get<std::string>(node, path, "integrator", "an integrator name")) {
    if (*name == "rk4") {
      f.integrator = Integrator::rk4;
    } else if (*name == "splitting") {
      f.integrator = Integrator::splitting;
    } else {
      r.fail(node["integrator"], "fp.integrator", "unknown integrator '" + *name + "'; valid integrators: rk4, splitting");
    }
  }
  if (auto names = r.names(node, path, "equations")) {
    f.equations.clear();
    for (const auto& name : *names) {
      if (auto e = parse_equation(name)) {
        f.equations.push_back(*e);
      } else {
        r.fail(node["equations"], "fp.equations",
               "unknown equation '" + name + "'; valid equations: discontinuous, surrogate, nonlocal");
      }
    }
  }
}

void read_entropy(Reader& r, const YAML::Node& root, ExperimentConfig& cfg) {
  const std::string path = "entropy";
  const YAML::Node node = root[path];
  if (!node.IsDefined() || !r.is_map(node, path)) return;
  r.allow_keys(node, path, {"lambdas", "reference", "reference_nx", "reference_t_end", "reference_safety", "fit_window"});
  auto& e = cfg.entropy;
  if (auto v = r.numbers(node, path, "lambdas")) e.lambdas = *v;
  if (auto v = r.count(node, path, "reference_nx")) e.reference_nx = *v;
  if (auto v = r.number(node, path, "reference_t_end")) e.reference_t_end = *v;
  if (auto v = r.number(node, path, "reference_safety")) e.reference_safety = *v;
  if (auto name = r.get<std::string>(node, path, "reference", "analytic or solution")) {
    if (*name == "analytic") {
      e.reference = EntropyReference::analytic;
    } else if (*name == "solution") {
      e.reference = EntropyReference::solution;
    } else {
      r.fail(node["reference"], "entropy.reference", "unknown reference '" + *name + "'; valid: analytic, solution");
    }
  }
  if (auto w = r.numbers(node, path, "fit_window")) {
    if (w->size() != 2) {
      r.fail(node["fit_window"], "entropy.fit_window", "expected [t0, t1]");
    } else {
      e.fit_window = std::make_pair((*w)[0], (*w)[1]);
    }
  }
}

std::string list_text(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + format_double(values[k]);
  return out + "]";
}

std::string point_text(const Point& p, int dim) {
  return dim == 2 ? "[" + format_double(p.x) + ", " + format_double(p.y) + "]" : "[" + format_double(p.x) + "]";
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::equilibrium: return "equilibrium";
    case ExperimentKind::particles: return "particles";
    case ExperimentKind::fp: return "fp";
    case ExperimentKind::compare: return "compare";
    case ExperimentKind::entropy: return "entropy";
  }
  return "?";
}

std::optional<ExperimentKind> parse_kind(const std::string& name) {
  for (auto k : {ExperimentKind::equilibrium, ExperimentKind::particles, ExperimentKind::fp, ExperimentKind::compare,
                 ExperimentKind::entropy}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string to_string(ParticleModel model) {
  return model == ParticleModel::discontinuous ? "discontinuous" : "surrogate";
}

std::string to_string(Equation equation) {
  switch (equation) {
    case Equation::discontinuous: return "discontinuous";
    case Equation::surrogate: return "surrogate";
    case Equation::nonlocal: return "nonlocal";
  }
  return "?";
}

std::string to_string(Integrator integrator) { return integrator == Integrator::rk4 ? "rk4" : "splitting"; }

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"f0_test1", "f0_test21", "init2D", "f0_test2"};
  return names;
}

std::optional<std::vector<MixtureComponent>> preset_components(const std::string& name) {
  if (name == "f0_test1") return std::vector<MixtureComponent>{{0.75, {-2.0, 0.0}, 0.1}, {0.25, {2.0, 0.0}, 0.1}};
  if (name == "f0_test21") return std::vector<MixtureComponent>{{0.75, {-2.0, 0.0}, 0.05}, {0.25, {2.0, 0.0}, 0.05}};
  if (name == "init2D") {
    return std::vector<MixtureComponent>{
        {0.375, {1.0, -1.0}, 0.2}, {0.375, {-1.0, 1.0}, 0.2}, {0.125, {1.0, 1.0}, 0.2}, {0.125, {-1.0, -1.0}, 0.2}};
  }
  if (name == "f0_test2") return std::vector<MixtureComponent>{{0.75, {2.0, -2.0}, 0.05}, {0.25, {2.0, 2.0}, 0.05}};
  return std::nullopt;
}

ConfigErrors::ConfigErrors(std::vector<std::string> errors)
    : std::runtime_error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& e : errors) msg += "\n  " + e;
        return msg;
      }()),
      errors_(std::move(errors)) {}

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigErrors({source + ": parse error at line " + std::to_string(e.mark.line + 1) + ": " + e.msg});
  }
  Reader r;
  ExperimentConfig cfg;
  if (!root.IsMap()) throw ConfigErrors({source + ": expected a mapping at the top level"});
  r.allow_keys(root, "", {"kind", "seed", "output", "model", "kernel", "initial", "grid", "particles", "fp", "entropy"});
  if (auto k = r.get<std::string>(root, "", "kind", "an experiment kind")) {
    if (auto kind = parse_kind(*k)) {
      cfg.kind = *kind;
    } else {
      r.fail(root["kind"], "kind", "unknown kind '" + *k + "'; valid kinds: equilibrium, particles, fp, compare, entropy");
    }
  }
  if (auto s = r.get<std::uint64_t>(root, "", "seed", "a nonnegative integer")) cfg.seed = *s;
  if (auto o = r.get<std::string>(root, "", "output", "a directory")) cfg.output = *o;
  read_model(r, root, cfg);
  read_kernel(r, root, cfg);
  read_initial(r, root, cfg);
  read_grid(r, root, cfg);
  read_particles(r, root, cfg);
  read_fp(r, root, cfg);
  read_entropy(r, root, cfg);
  for (auto& e : validate(cfg)) r.errors.push_back(std::move(e));
  if (!r.errors.empty()) {
    for (auto& e : r.errors) e = source + ": " + e;
    throw ConfigErrors(std::move(r.errors));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigErrors({path + ": cannot open file"});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::vector<std::string> validate(const ExperimentConfig& cfg) {
  std::vector<std::string> errors;
  for (const auto& e : cfg.model.validation_errors()) errors.push_back("model." + e);
  if (const auto* cs = std::get_if<CuckerSmaleKernel>(&cfg.kernel); cs && !(cs->gamma > 0.0)) {
    errors.push_back("kernel.gamma: must be positive");
  }
  if (cfg.kind == ExperimentKind::equilibrium) return errors;

  double total = 0.0;
  for (std::size_t k = 0; k < cfg.initial.components.size(); ++k) {
    const auto& c = cfg.initial.components[k];
    const std::string path = "initial.components[" + std::to_string(k) + "]";
    if (!(c.weight > 0.0)) errors.push_back(path + ".weight: must be positive");
    if (!(c.variance > 0.0)) errors.push_back(path + ".variance: must be positive");
    total += c.weight;
  }
  if (!cfg.initial.components.empty() && std::abs(total - 1.0) > 1e-12) {
    errors.push_back("initial.components: weights must sum to 1");
  }
  if (!cfg.initial.preset.empty()) {
    const bool two_d = cfg.initial.preset == "init2D" || cfg.initial.preset == "f0_test2";
    if ((two_d ? 2 : 1) != cfg.model.dim) errors.push_back("initial.preset: preset dimension differs from model.dim");
  }
  if (!(cfg.grid.hi > cfg.grid.lo)) errors.push_back("grid: lo must be smaller than hi");
  if (cfg.grid.nx < 2) errors.push_back("grid.nx: at least 2 nodes are required");

  const bool uses_particles = cfg.kind == ExperimentKind::particles || cfg.kind == ExperimentKind::compare;
  const bool uses_fp = cfg.kind != ExperimentKind::particles;
  if (uses_particles) {
    const auto& p = cfg.particles;
    if (p.n == 0) errors.push_back("particles.n: at least one particle is required");
    if (!(p.dt > 0.0)) errors.push_back("particles.dt: must be positive");
    if (!(p.t_end >= 0.0)) errors.push_back("particles.t_end: must be nonnegative");
    if (p.record_every == 0) errors.push_back("particles.record_every: must be at least 1");
    if (p.models.empty()) errors.push_back("particles.models: at least one model is required");
  }
  if (uses_fp) {
    const auto& f = cfg.fp;
    if (!(f.t_end >= 0.0)) errors.push_back("fp.t_end: must be nonnegative");
    if (f.record_every == 0) errors.push_back("fp.record_every: must be at least 1");
    if (!(f.safety > 0.0 && f.safety <= 1.0)) errors.push_back("fp.safety: must lie in (0, 1]");
    std::vector<Equation> equations = f.equations;
    if (cfg.kind == ExperimentKind::compare) {
      equations.clear();
      for (auto m : cfg.particles.models) {
        equations.push_back(m == ParticleModel::discontinuous ? Equation::discontinuous : Equation::surrogate);
      }
    } else if (f.equations.empty()) {
      errors.push_back("fp.equations: at least one equation is required");
    }
    for (auto eq : equations) {
      if (eq == Equation::surrogate && !is_uniform(cfg.kernel)) {
        errors.push_back(cfg.kind == ExperimentKind::compare
                             ? "particles.models: the surrogate model needs the uniform kernel"
                             : "fp.equations: the surrogate equation needs the uniform kernel");
      }
      if (f.integrator == Integrator::splitting && eq != Equation::surrogate) {
        errors.push_back("fp.integrator: splitting is only available for the surrogate equation");
      }
    }
    if (errors.empty()) {
      for (auto eq : equations) {
        FpConfig fc;
        fc.equation = eq;
        fc.dt = f.dt;
        fc.safety = f.safety;
        try {
          check_stability(fc, cfg.model, cfg.grid.axis(), cfg.model.dim);
        } catch (const ConfigError& e) {
          errors.push_back("fp.dt: " + std::string(e.what()));
        }
      }
    }
  }
  if (cfg.kind == ExperimentKind::entropy) {
    const auto& e = cfg.entropy;
    if (e.lambdas.empty()) errors.push_back("entropy.lambdas: at least one value is required");
    for (double l : e.lambdas) {
      if (!(l > 0.0 && l <= 1.0)) errors.push_back("entropy.lambdas: values must lie in (0, 1]");
    }
    if (e.reference == EntropyReference::analytic && !is_uniform(cfg.kernel)) {
      errors.push_back("entropy.reference: no closed-form steady state for this kernel; use solution");
    }
    if (e.reference_nx < 2) errors.push_back("entropy.reference_nx: at least 2 nodes are required");
    if (!(e.reference_safety > 0.0 && e.reference_safety <= 1.0)) {
      errors.push_back("entropy.reference_safety: must lie in (0, 1]");
    }
    if (e.fit_window && !(e.fit_window->second > e.fit_window->first)) {
      errors.push_back("entropy.fit_window: t1 must exceed t0");
    }
  }
  return errors;
}

std::string write_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  const int dim = cfg.model.dim;
  out << "kind: " << to_string(cfg.kind) << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "output: \"" << cfg.output << "\"\n";
  out << "model:\n";
  out << "  dim: " << dim << "\n";
  out << "  lambda: " << format_double(cfg.model.lambda) << "\n";
  out << "  mu: " << format_double(cfg.model.mu) << "\n";
  if (cfg.inner_mass) {
    out << "  inner_mass: " << format_double(*cfg.inner_mass) << "\n";
  } else {
    out << "  sigma2: " << format_double(cfg.model.sigma2) << "\n";
  }
  out << "  delta: " << format_double(cfg.model.delta) << "\n";
  out << "  x0: " << point_text(cfg.model.x0, dim) << "\n";
  if (const auto* cs = std::get_if<CuckerSmaleKernel>(&cfg.kernel)) {
    out << "kernel:\n  type: cucker_smale\n  gamma: " << format_double(cs->gamma) << "\n";
  } else {
    out << "kernel:\n  type: uniform\n";
  }
  if (!cfg.initial.preset.empty()) {
    out << "initial:\n  preset: " << cfg.initial.preset << "\n";
  } else if (!cfg.initial.components.empty()) {
    out << "initial:\n  components:\n";
    for (const auto& c : cfg.initial.components) {
      out << "    - {weight: " << format_double(c.weight) << ", mean: " << point_text(c.mean, dim)
          << ", variance: " << format_double(c.variance) << "}\n";
    }
  }
  out << "grid: {lo: " << format_double(cfg.grid.lo) << ", hi: " << format_double(cfg.grid.hi)
      << ", nx: " << cfg.grid.nx << "}\n";
  const auto& p = cfg.particles;
  out << "particles:\n";
  out << "  n: " << p.n << "\n  dt: " << format_double(p.dt) << "\n  t_end: " << format_double(p.t_end) << "\n";
  out << "  models: [";
  for (std::size_t k = 0; k < p.models.size(); ++k) out << (k ? ", " : "") << to_string(p.models[k]);
  out << "]\n  record_every: " << p.record_every << "\n  snapshot_times: " << list_text(p.snapshot_times) << "\n";
  const auto& f = cfg.fp;
  out << "fp:\n  equations: [";
  for (std::size_t k = 0; k < f.equations.size(); ++k) out << (k ? ", " : "") << to_string(f.equations[k]);
  out << "]\n  integrator: " << to_string(f.integrator) << "\n  dt: " << format_double(f.dt)
      << "\n  t_end: " << format_double(f.t_end) << "\n  record_every: " << f.record_every
      << "\n  snapshot_times: " << list_text(f.snapshot_times) << "\n  safety: " << format_double(f.safety) << "\n";
  const auto& e = cfg.entropy;
  out << "entropy:\n  lambdas: " << list_text(e.lambdas) << "\n  reference: "
      << (e.reference == EntropyReference::analytic ? "analytic" : "solution") << "\n  reference_nx: " << e.reference_nx
      << "\n  reference_t_end: " << format_double(e.reference_t_end)
      << "\n  reference_safety: " << format_double(e.reference_safety) << "\n";
  if (e.fit_window) out << "  fit_window: " << list_text({e.fit_window->first, e.fit_window->second}) << "\n";
  return out.str();
}

}  // namespace swarmkin::app
