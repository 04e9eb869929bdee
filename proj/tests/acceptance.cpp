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

// Acceptance run: one PASS/FAIL line per criterion at the default desk
// scale (n = 256, L = 16, unit Gaussian window). Exit status is nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "metaframe/frames.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/symplectic.hpp"
#include "metaframe/tfr.hpp"

namespace mf = metaframe;

namespace {

// Tolerances, one per check.
constexpr double kFactorStft = 1e-8;
constexpr double kFactorTau = 1e-6;
constexpr double kDuality = 1e-7;
constexpr double kDualityFloor = 1e-6;  // nodes with |W_A| below this are redrawn
constexpr double kRoundTrip = 1e-9;
constexpr double kMoyal = 1e-4;
constexpr double kCovariance = 1e-6;
constexpr double kAtomModulus = 1e-8;
constexpr double kEnergyTransfer = 1e-6;
constexpr double kBoundRatio = 0.02;
constexpr double kReconClassical = 1e-6;
constexpr double kReconMetaplectic = 1e-5;
constexpr double kInversion = 1e-3;
constexpr double kStftSpread = 1e-9;
constexpr double kBaseline = 0.05;
constexpr double kSymplectic = 1e-10;
constexpr double kTryFactor = 1e-9;
constexpr double kAlpha = 1e-12;

// Oracle spread baselines, see tests/oracle_baselines.cpp.
constexpr double kTauHalfP1 = 1.0002782318;
constexpr double kTauThirdV1 = 1.3006769040;
constexpr double kTauQuarterP2Q1 = 1.2412640918;
constexpr double kAmalgamTauHalfV1 = 1.4633352064;
constexpr double kAmalgamTauThirdP1Q2 = 1.1198374227;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const mf::Grid1D kGrid(256, 16.0);
const mf::TFGrid kTF{kGrid, kGrid.dual()};
const mf::Window kG = mf::Window::gaussian();

mf::WignerFactorization chirped() {
  mf::Matrix c(2, 2);
  c << 0.3, 0.1, 0.1, -0.2;
  return mf::WignerFactorization(c, mf::tau_factorization(1.0 / 3.0).e());
}

double max_diff(const mf::ComplexMatrix &a, const mf::ComplexMatrix &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Outcome criterion1() {
  const mf::Window f = mf::Window::hermite(1, 1.2);
  const double stft = max_diff(mf::wigner_metaplectic(f, kG, mf::stft_factorization(), kTF).values,
                               mf::stft_direct(f, kG, kTF).values);
  double tau_worst = 0.0;
  for (double tau : {0.25, 1.0 / 3.0, 0.5, 0.75}) {
    tau_worst = std::max(
        tau_worst, max_diff(mf::wigner_metaplectic(f, kG, mf::tau_factorization(tau), kTF).values,
                            mf::tau_wigner_direct(f, kG, tau, kTF).values));
  }
  return {stft <= kFactorStft && tau_worst <= kFactorTau,
          fmt("stft %.2e (tol %.0e), tau %.2e (tol 1e-6)", stft, kFactorStft, tau_worst)};
}

Outcome criterion2() {
  const mf::Grid1D pairing(4096, 32.0);
  const mf::Window f = mf::Window::hermite(1, 1.2);
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  int nodes = 0;
  for (const auto &fac : {mf::stft_factorization(), mf::tau_factorization(0.5),
                          mf::tau_factorization(1.0 / 3.0), chirped()}) {
    for (int k = 0; k < 25; ++k) {
      double x = 0.0;
      double xi = 0.0;
      mf::cdouble w;
      do {
        x = u(rng);
        xi = u(rng);
        w = mf::wigner_metaplectic_at(f, kG, fac, x, xi, pairing);
      } while (std::abs(w) < kDualityFloor);
      const mf::cdouble ip = mf::inner_product(f, mf::atom_apply(fac, x, xi, kG), pairing);
      worst = std::max(worst, std::abs(w - ip) / std::abs(w));
      ++nodes;
    }
  }
  return {worst <= kDuality, fmt("max relative error %.2e over %.0f nodes (tol %.0e)", worst,
                                 nodes, kDuality)};
}

Outcome criterion3() {
  const std::vector<mf::WignerFactorization> facs = {
      mf::stft_factorization(), mf::tau_factorization(0.5), mf::tau_factorization(0.2),
      mf::tau_factorization(0.7), chirped()};
  const std::vector<mf::Window> windows = {kG, mf::Window::hermite(2, 0.8),
                                           mf::Window::chirped_gaussian(1.2, 0.4)};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto &fac = facs[static_cast<std::size_t>(k) % facs.size()];
    const auto &w = windows[static_cast<std::size_t>(k) % windows.size()];
    const double x = u(rng);
    const double xi = u(rng);
    const mf::Window back = mf::atom_inverse_apply(fac, x, xi, mf::atom_apply(fac, x, xi, w));
    worst = std::max(worst, (back.sample(kGrid).values - w.sample(kGrid).values)
                                .cwiseAbs()
                                .maxCoeff());
  }
  return {worst <= kRoundTrip, fmt("max error %.2e over 50 draws (tol %.0e)", worst, kRoundTrip)};
}

Outcome criterion4() {
  const auto family = mf::signal_family_v1();
  double worst = 0.0;
  for (const auto &fac : {mf::stft_factorization(), mf::tau_factorization(0.5)}) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i; j < family.size(); j += 3) {
        worst = std::max(worst, mf::moyal_residual(family[i].window, kG, family[j].window,
                                                   mf::Window::hermite(1), fac, kTF));
        worst = std::max(worst, mf::moyal_residual(family[i].window, kG, family[j].window, kG,
                                                   fac, kTF));
      }
    }
  }
  return {worst <= kMoyal, fmt("max residual %.2e (tol %.0e)", worst, kMoyal)};
}

Outcome criterion5() {
  const mf::Window f = mf::Window::hermite(2);
  double worst = 0.0;
  for (const Eigen::Vector2d w : {Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(-1.0, 0.25),
                                  Eigen::Vector2d(1.5, -0.75)}) {
    worst = std::max(worst, mf::covariance_residual(mf::stft_factorization(), f, kG, w, kTF));
    worst = std::max(worst, mf::covariance_residual(mf::tau_factorization(0.5), f, kG, w, kTF));
  }
  return {worst <= kCovariance, fmt("max residual %.2e (tol %.0e)", worst, kCovariance)};
}

Outcome criterion6() {
  const mf::Lattice spec_lattice(1.0, 0.5, 8.0);
  const mf::Lattice matched(0.5, 0.25, 4.0);
  double atoms = 0.0;
  double ratio_dev = 0.0;
  bool passed = true;
  for (const auto &fac : {mf::stft_factorization(), mf::tau_factorization(0.5)}) {
    for (const auto &lat : {spec_lattice, matched}) {
      const auto r = mf::theorem_main_check(fac, kG, lat, kGrid);
      atoms = std::max({atoms, r.modulus_residual, r.vector_residual});
      ratio_dev = std::max(ratio_dev, std::abs(r.observed_ratio / r.expected_ratio - 1.0));
      if (r.lower_ratio) {
        ratio_dev = std::max(ratio_dev, std::abs(*r.lower_ratio / r.expected_ratio - 1.0));
      }
      passed = passed && r.bounds_checked;
    }
  }
  // The metaplectic system on the matched lattice must itself be a frame
  // so that both bound ratios are exercised.
  const auto m = mf::theorem_main_check(mf::tau_factorization(0.5), kG, matched, kGrid);
  passed = passed && m.lower_ratio.has_value();

  const mf::Grid1D fine(4096, 32.0);
  double transfer = 0.0;
  for (const mf::Window &f : {mf::translate(mf::Window::hermite(1), 0.5),
                              mf::modulate(mf::translate(kG, -1.0), 0.5)}) {
    transfer = std::max(transfer, mf::energy_transfer(mf::tau_factorization(0.5), kG, matched, f,
                                                      fine)
                                      .relative_residual());
    transfer = std::max(
        transfer,
        mf::energy_transfer(mf::stft_factorization(), kG, spec_lattice, f, kGrid)
            .relative_residual());
  }
  passed = passed && atoms <= kAtomModulus && transfer <= kEnergyTransfer &&
           ratio_dev <= kBoundRatio;
  return {passed, fmt("atoms %.2e (tol 1e-8), energy %.2e (tol 1e-6), ratio deviation %.2e "
                      "(tol 0.02)",
                      atoms, transfer, ratio_dev)};
}

Outcome criterion7() {
  const auto classical = mf::build_system(kG, mf::Lattice(1.0, 0.5, 8.0),
                                          mf::AtomKind::classical(), kGrid);
  const auto meta = mf::build_system(kG, mf::Lattice(0.5, 0.25, 4.0),
                                     mf::AtomKind::metaplectic(mf::tau_factorization(0.5)), kGrid);
  const mf::Window f = mf::translate(kG, 1.0);
  const double ec = mf::frame_reconstruct(classical, f).relative_error;
  const double em = mf::frame_reconstruct(meta, f).relative_error;
  const mf::TFGrid tf128{mf::Grid1D(128, 16.0), mf::Grid1D(128, 16.0)};
  const mf::Signal inv =
      mf::inversion_reconstruct(f, kG, kG, mf::stft_factorization(), tf128, kGrid);
  const mf::Signal fs = f.sample(kGrid);
  const double ei = (inv.values - fs.values).norm() / fs.values.norm();
  return {ec <= kReconClassical && em <= kReconMetaplectic && ei <= kInversion,
          fmt("classical %.2e (tol 1e-6), metaplectic %.2e (tol 1e-5), inversion %.2e (tol 1e-3)",
              ec, em, ei)};
}

Outcome criterion8() {
  const auto family = mf::signal_family_v1();
  double stft_dev = 0.0;
  for (const mf::NormSpec &spec :
       {mf::NormSpec{}, mf::NormSpec{1.0, 2.0, mf::Weight::polynomial(1.0)},
        mf::NormSpec{1.0, 1.0, mf::Weight::constant()}}) {
    stft_dev = std::max(
        stft_dev,
        std::abs(mf::wa_modulation_equivalence(mf::stft_factorization(), family, kG, spec).spread -
                 1.0));
  }
  const mf::Weight1D v1 = mf::Weight1D::polynomial(1.0);
  const std::vector<std::pair<double, double>> observed = {
      {mf::wa_modulation_equivalence(mf::tau_factorization(0.5), family, kG,
                                     mf::NormSpec{1, 1, mf::Weight::constant()})
           .spread,
       kTauHalfP1},
      {mf::wa_modulation_equivalence(mf::tau_factorization(1.0 / 3.0), family, kG,
                                     mf::NormSpec{2, 2, mf::Weight::polynomial(1.0)})
           .spread,
       kTauThirdV1},
      {mf::wa_modulation_equivalence(mf::tau_factorization(0.25), family, kG,
                                     mf::NormSpec{2, 1, mf::Weight::constant()})
           .spread,
       kTauQuarterP2Q1},
      {mf::wa_amalgam_equivalence(mf::tau_factorization(0.5), family, kG,
                                  mf::AmalgamSpec{2, 2, v1, v1})
           .spread,
       kAmalgamTauHalfV1},
      {mf::wa_amalgam_equivalence(mf::tau_factorization(1.0 / 3.0), family, kG,
                                  mf::AmalgamSpec{1, 2})
           .spread,
       kAmalgamTauThirdP1Q2}};
  double baseline_dev = 0.0;
  for (const auto &[spread, baseline] : observed) {
    baseline_dev = std::max(baseline_dev, std::abs(spread / baseline - 1.0));
  }
  return {stft_dev <= kStftSpread && baseline_dev <= kBaseline,
          fmt("stft spread deviation %.2e (tol 1e-9), max baseline deviation %.2e (tol 0.05)",
              stft_dev, baseline_dev)};
}

Outcome criterion9() {
  std::mt19937_64 rng(909);
  std::normal_distribution<double> n01;
  double symp = 0.0;
  double round_trip = 0.0;
  double alpha = 0.0;
  int samples = 0;
  while (samples < 100) {
    mf::Matrix e(2, 2);
    e << n01(rng), n01(rng), n01(rng), n01(rng);
    if (std::abs(e.determinant()) < 1e-3) {
      continue;
    }
    const mf::BlockMatrix2d be(e);
    if (!mf::is_right_regular(be) || be.condition_number() > 1e3) {
      continue;
    }
    mf::Matrix c = mf::Matrix::Zero(2, 2);
    c(0, 0) = n01(rng);
    c(1, 1) = n01(rng);
    const mf::WignerFactorization fac(c, be);
    const auto assembled = fac.assembled();
    // Same scale-relative residual as is_symplectic.
    for (const mf::Matrix &s :
         {assembled.matrix(),
          (assembled * mf::make_aft2(1) * mf::make_vc(c) * mf::make_de(be).inverse()).matrix()}) {
      const double scale = 1.0 + std::pow(s.cwiseAbs().maxCoeff(), 2);
      symp = std::max(symp, mf::symplectic_residual(s) / scale);
      if (!mf::is_symplectic(s)) {
        symp = std::max(symp, 1.0);
      }
    }
    const auto pair = mf::try_factor(assembled);
    if (!pair) {
      round_trip = 1.0;
    } else {
      round_trip = std::max({round_trip, (pair->chirp - c).cwiseAbs().maxCoeff(),
                             (pair->e.matrix() - e).cwiseAbs().maxCoeff()});
    }
    alpha = std::max(alpha, std::abs(fac.alpha() * fac.alpha_inverse() - 1.0));
    ++samples;
  }
  return {symp <= kSymplectic && round_trip <= kTryFactor && alpha <= kAlpha,
          fmt("relative symplectic residual %.2e (tol 1e-10), try_factor %.2e (tol 1e-9), alpha %.2e (tol 1e-12)",
              symp, round_trip, alpha)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i]();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
