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

#include "swarmkin/app/manifest.hpp"

#include <sstream>
#include <stdexcept>

namespace swarmkin::app {

namespace {

const char* const kPrelude = R"PY(#!/usr/bin/env python3
"""Figures for one swarmkin run. Writes PNG files next to this script."""
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))


def load(name):
    return np.genfromtxt(os.path.join(HERE, name), delimiter=",", names=True, dtype=None, encoding="utf-8")


def save(fig, name):
    fig.tight_layout()
    fig.savefig(os.path.join(HERE, os.path.splitext(name)[0] + ".png"), dpi=120)
    plt.close(fig)


def density_1d(name, title, steady=None):
    d = load(name)
    fig, ax = plt.subplots(figsize=(6, 4))
    for t in np.unique(d["t"]):
        s = d[d["t"] == t]
        ax.plot(s["x1"], s["f"], label="t = %g" % t)
    if steady:
        s = load(steady)
        ax.plot(s["x1"], s["f"] / (s["f"].sum() * (s["x1"][1] - s["x1"][0])), "k--", label="steady state")
    ax.set_xlabel("x")
    ax.set_ylabel("f")
    ax.set_title(title)
    ax.legend()
    save(fig, name)


def density_2d(name, title):
    d = load(name)
    times = np.unique(d["t"])
    fig, axes = plt.subplots(2, len(times), squeeze=False, figsize=(4 * len(times), 7))
    for c, t in enumerate(times):
        s = d[d["t"] == t]
        x = np.unique(s["x1"])
        dx = x[1] - x[0]
        f = s["f"].reshape(len(x), len(x))  # rows follow x2, columns follow x1
        axes[0, c].imshow(f, origin="lower", extent=[x[0], x[-1], x[0], x[-1]], aspect="equal")
        axes[0, c].set_title("%s, t = %g" % (title, t))
        axes[1, c].plot(x, f.sum(axis=0) * dx, label="x1 marginal")
        axes[1, c].plot(x, f.sum(axis=1) * dx, label="x2 marginal")
        axes[1, c].legend()
    save(fig, name)


def steady(name, title):
    d = load(name)
    fig, ax = plt.subplots(figsize=(6, 4))
    if "x2" in d.dtype.names:
        x = np.unique(d["x1"])
        ax.imshow(d["f"].reshape(len(x), len(x)), origin="lower", extent=[x[0], x[-1], x[0], x[-1]])
    else:
        ax.plot(d["x1"], d["f"])
        ax.set_xlabel("x")
    ax.set_title(title)
    save(fig, name)


def field_series(name, title):
    d = load(name)
    cols = [c for c in d.dtype.names if c != "t"]
    fig, axes = plt.subplots(1, len(cols), figsize=(3.2 * len(cols), 3.2))
    for ax, c in zip(axes, cols):
        v = d[c]
        if c == "entropy" and np.all(v[np.isfinite(v)] > 0) and np.any(np.isfinite(v)):
            ax.semilogy(d["t"], v)
        else:
            ax.plot(d["t"], v)
        ax.set_title(c)
        ax.set_xlabel("t")
    fig.suptitle(title)
    save(fig, name)


def trajectory(name, title):
    d = load(name)
    fig, ax = plt.subplots(figsize=(6, 4))
    for c in d.dtype.names[1:]:
        ax.plot(d["t"], d[c], label=c)
    ax.set_xlabel("t")
    ax.set_title(title)
    ax.legend()
    save(fig, name)


def distances(name, title):
    d = load(name)
    fig, ax = plt.subplots(figsize=(6, 4))
    values = [c for c in d.dtype.names if c not in ("model", "t")]
    for m in np.unique(d["model"]):
        s = d[d["model"] == m]
        for c in values:
            ax.semilogy(s["t"], s[c], "o-", label="%s %s" % (m, c))
    ax.set_xlabel("t")
    ax.set_ylabel("L1")
    ax.set_title(title)
    ax.legend()
    save(fig, name)


def decay(series, out):
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, label in series:
        d = load(name)
        keep = d["value"] > 0
        ax.semilogy(d["t"][keep], d["value"][keep], label=label)
    ax.set_xlabel("t")
    ax.set_ylabel("H")
    ax.legend()
    save(fig, out)


)PY";

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::density: return "density";
    case ArtifactKind::steady_state: return "steady_state";
    case ArtifactKind::field_series: return "field_series";
    case ArtifactKind::trajectory: return "trajectory";
    case ArtifactKind::particles: return "particles";
    case ArtifactKind::decay: return "decay";
    case ArtifactKind::distances: return "distances";
    case ArtifactKind::report: return "report";
    case ArtifactKind::metadata: return "metadata";
    case ArtifactKind::plot_script: return "plot_script";
  }
  return "?";
}

std::string emit_plot_script(const Manifest& manifest) {
  if (manifest.files.empty()) throw std::invalid_argument("emit_plot_script: the manifest lists no files");
  std::string steady;
  for (const auto& a : manifest.files) {
    if (a.kind == ArtifactKind::steady_state && a.dim == 1) steady = a.path;
  }
  std::ostringstream body;
  std::ostringstream decays;
  for (const auto& a : manifest.files) {
    const auto name = quoted(a.path);
    const auto title = quoted(a.label);
    switch (a.kind) {
      case ArtifactKind::density:
        if (a.dim == 2) {
          body << "density_2d(" << name << ", " << title << ")\n";
        } else {
          body << "density_1d(" << name << ", " << title << (steady.empty() ? "" : ", " + quoted(steady)) << ")\n";
        }
        break;
      case ArtifactKind::steady_state:
        body << "steady(" << name << ", " << title << ")\n";
        break;
      case ArtifactKind::field_series: body << "field_series(" << name << ", " << title << ")\n"; break;
      case ArtifactKind::trajectory: body << "trajectory(" << name << ", " << title << ")\n"; break;
      case ArtifactKind::distances: body << "distances(" << name << ", " << title << ")\n"; break;
      case ArtifactKind::decay: decays << "    (" << name << ", " << title << "),\n"; break;
      default: break;
    }
  }
  std::string script = kPrelude;
  script += "def main():\n";
  std::istringstream lines(body.str());
  bool any = false;
  for (std::string line; std::getline(lines, line);) {
    script += "    " + line + "\n";
    any = true;
  }
  if (!decays.str().empty()) {
    script += "    decay([\n" + decays.str() + "    ], \"decay.png\")\n";
    any = true;
  }
  if (!any) script += "    print(\"nothing to plot\")\n";
  script += "\n\nif __name__ == \"__main__\":\n    main()\n";
  return script;
}

std::string manifest_text(const Manifest& manifest) {
  std::string out;
  for (const auto& a : manifest.files) out += to_string(a.kind) + " " + std::to_string(a.dim) + " " + a.path + "\n";
  return out;
}

}  // namespace swarmkin::app
