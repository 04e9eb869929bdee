// Copyright 2026 The metaframe Authors
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

#include "verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "metaframe/error.hpp"
#include "metaframe/frames.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/tfr.hpp"

namespace metaframe::cli {

namespace {

using Suite = std::function<void(const RunConfig &, std::vector<CheckResult> &)>;

void record(std::vector<CheckResult> &out, const std::string &suite, const std::string &name,
            double value, double tol) {
  out.push_back({suite, name, value, tol, value <= tol});
}

std::vector<std::pair<std::string, WignerFactorization>> test_factorizations() {
  Matrix c(2, 2);
  c << 0.3, 0.1, 0.1, -0.2;
  return {{"stft", stft_factorization()},
          {"tau:0.5", tau_factorization(0.5)},
          {"tau:0.25", tau_factorization(0.25)},
          {"chirped", WignerFactorization(c, tau_factorization(1.0 / 3.0).e())}};
}

void suite_moyal(const RunConfig &config, std::vector<CheckResult> &out) {
  const TFGrid tf = config.tf();
  const Window g = parse_window(config.window);
  const auto family = signal_family_v1();
  for (const auto &[name, fac] :
       {std::pair{std::string("stft"), stft_factorization()},
        std::pair{std::string("tau:0.5"), tau_factorization(0.5)}}) {
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto &f = family[i].window;
      const auto &phi = family[(i + 3) % family.size()].window;
      worst = std::max(worst, moyal_residual(f, g, phi, f, fac, tf));
    }
    record(out, "moyal", name, worst, 1e-4);
  }
}

void suite_atoms(const RunConfig &config, std::vector<CheckResult> &out) {
  // Atoms modulate at up to E12^{-T} xi, so the pairing grid is finer than
  // the signal grid to keep them below Nyquist.
  const Grid1D y(4096, 32.0);
  const Window g = parse_window(config.window);
  const Window f = Window::hermite(1, 1.2);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto &[name, fac] : test_factorizations()) {
    double duality = 0.0;
    double round_trip = 0.0;
    for (int k = 0; k < 5; ++k) {
      double x = 0.0;
      double xi = 0.0;
      cdouble w;
      // Relative error is only meaningful where W_A is not at roundoff level.
      do {
        x = u(rng);
        xi = u(rng);
        w = wigner_metaplectic_at(f, g, fac, x, xi, y);
      } while (std::abs(w) < 1e-6);
      const cdouble ip = inner_product(f, atom_apply(fac, x, xi, g), y);
      duality = std::max(duality, std::abs(w - ip) / std::abs(w));
      const Window back = atom_inverse_apply(fac, x, xi, atom_apply(fac, x, xi, f));
      round_trip = std::max(
          round_trip,
          (back.sample(config.grid()).values - f.sample(config.grid()).values).cwiseAbs().maxCoeff());
    }
    record(out, "atoms", "duality/" + name, duality, 1e-7);
    record(out, "atoms", "round_trip/" + name, round_trip, 1e-9);
  }
}

void suite_factor(const RunConfig &, std::vector<CheckResult> &out) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n01;
  double worst = 0.0;
  int failures = 0;
  for (int k = 0; k < 20; ++k) {
    Matrix e(2, 2);
    e << n01(rng), n01(rng), n01(rng), n01(rng);
    if (std::abs(e(0, 1)) < 0.2 || std::abs(e(1, 1)) < 0.2 || std::abs(e.determinant()) < 0.2) {
      continue;
    }
    Matrix c = Matrix::Zero(2, 2);
    c(0, 0) = n01(rng);
    c(1, 1) = n01(rng);
    const WignerFactorization fac(c, BlockMatrix2d(e));
    const auto pair = try_factor(fac.assembled());
    if (!pair) {
      ++failures;
      continue;
    }
    worst = std::max({worst, (pair->chirp - c).cwiseAbs().maxCoeff(),
                      (pair->e.matrix() - e).cwiseAbs().maxCoeff()});
  }
  record(out, "factor", "round_trip", worst, 1e-9);
  record(out, "factor", "failures", failures, 0.0);
}

void suite_covariance(const RunConfig &config, std::vector<CheckResult> &out) {
  const TFGrid tf = config.tf();
  const Window g = parse_window(config.window);
  const Window f = Window::hermite(2);
  for (const auto &[name, fac] :
       {std::pair{std::string("stft"), stft_factorization()},
        std::pair{std::string("tau:0.5"), tau_factorization(0.5)}}) {
    const double r = covariance_residual(fac, f, g, Eigen::Vector2d(1.0, 0.5), tf);
    record(out, "covariance", name, r, 1e-6);
  }
}

void suite_frames(const RunConfig &config, std::vector<CheckResult> &out) {
  const Window g = parse_window(config.window);
  for (const auto &[name, fac] :
       {std::pair{std::string("stft"), stft_factorization()},
        std::pair{std::string("tau:0.5"), tau_factorization(0.5)}}) {
    const auto r = theorem_main_check(fac, g, Lattice(1.0, 0.5, 8.0), config.grid());
    record(out, "frames", "atoms/" + name, std::max(r.modulus_residual, r.vector_residual),
           TheoremMainReport::kAtomTolerance);
    record(out, "frames", "ratio/" + name, std::abs(r.observed_ratio / r.expected_ratio - 1.0),
           TheoremMainReport::kRatioTolerance);
  }
}

void suite_norms(const RunConfig &config, std::vector<CheckResult> &out) {
  const Window g = parse_window(config.window);
  const auto family = signal_family_v1();
  const auto rep = wa_modulation_equivalence(stft_factorization(), family, g, config.norm,
                                             config.tf());
  record(out, "norms", "stft_spread", std::abs(rep.spread - 1.0), 1e-9);
  const double m = modulation_norm(Window::gaussian(), Window::gaussian(), NormSpec{},
                                   config.tf());
  record(out, "norms", "moyal_gaussian", std::abs(m - 1.0), 1e-3);
}

const std::map<std::string, Suite> &suites() {
  static const std::map<std::string, Suite> table = {
      {"moyal", suite_moyal},   {"atoms", suite_atoms},           {"factor", suite_factor},
      {"covariance", suite_covariance}, {"frames", suite_frames}, {"norms", suite_norms}};
  return table;
}

}  // namespace

const std::vector<std::string> &verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto &[name, fn] : suites()) {
      v.push_back(name);
    }
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string &suite, const RunConfig &config) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto &[name, fn] : suites()) {
      fn(config, out);
    }
    return out;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + suite + "'");
  }
  it->second(config, out);
  return out;
}

void print_checks(std::ostream &os, const std::vector<CheckResult> &checks) {
  for (const auto &c : checks) {
    os << nlohmann::json{{"suite", c.suite},
                         {"check", c.name},
                         {"value", c.value},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}}
              .dump()
       << '\n';
  }
}

}  // namespace metaframe::cli
