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

#include <cmath>
#include <random>

#include "metaframe/spaces.hpp"
#include "metaframe/tfr.hpp"
#include "test_util.hpp"

namespace metaframe {
namespace {

using testing::default_grid;
using testing::default_tf;
using testing::max_abs_diff;
using testing::mat;

Window gauss() { return Window::gaussian(); }

WignerFactorization chirped() {
  return WignerFactorization(mat(2, 2, {0.3, 0.1, 0.1, -0.2}), tau_factorization(1.0 / 3.0).e());
}

TEST(TensorEval, Examples) {
  const TFGrid tf = default_tf();
  const BlockMatrix2d e_st = stft_factorization().e();
  const TFArray t = tensor_eval(gauss(), gauss(), e_st, tf);
  EXPECT_NEAR(std::abs(t.values(128, 128) - std::sqrt(2.0)), 0.0, 1e-14);
  // F(x, y) = f(y) conj(g(y - x)).
  const Window f = Window::hermite(1);
  const TFArray u = tensor_eval(f, gauss(), e_st, tf);
  const Grid1D y = tf.integration_grid();
  for (auto [i, k] : {std::pair<std::size_t, std::size_t>{100, 140}, {128, 60}, {170, 128}}) {
    const cdouble expected = f(y.node(k)) * std::conj(gauss()(y.node(k) - tf.time.node(i)));
    EXPECT_NEAR(std::abs(u.values(Index(i), Index(k)) - expected), 0.0, 1e-14);
  }
  const Window zero = scale(gauss(), 0.0);
  EXPECT_EQ(tensor_eval(zero, gauss(), e_st, tf).values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(StftDirect, GaussianClosedForm) {
  const TFGrid tf = default_tf();
  const TFArray v = stft_direct(gauss(), gauss(), tf);
  EXPECT_NEAR(std::abs(v.values(128, 128)), 1.0, 1e-10);
  for (auto [i, k] : {std::pair<Index, Index>{100, 140}, {128, 60}, {150, 150}}) {
    const double x = tf.time.node(std::size_t(i));
    const double xi = tf.freq.node(std::size_t(k));
    EXPECT_NEAR(std::abs(v.values(i, k)), std::exp(-kPi * (x * x + xi * xi) / 2.0), 1e-10);
  }
}

TEST(TauWignerDirect, GaussianIsWigner) {
  const TFGrid tf = default_tf();
  const TFArray w = tau_wigner_direct(gauss(), gauss(), 0.5, tf);
  double worst = 0.0;
  for (Index i = 0; i < 256; ++i) {
    for (Index k = 0; k < 256; ++k) {
      const double x = tf.time.node(std::size_t(i));
      const double xi = tf.freq.node(std::size_t(k));
      worst = std::max(worst,
                       std::abs(w.values(i, k) - 2.0 * std::exp(-2.0 * kPi * (x * x + xi * xi))));
    }
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(TauWignerDirect, RihaczekLimit) {
  // tau = 0 collapses to f(x) conj(g^(xi)) exp(-2 pi i x xi).
  const TFGrid tf = default_tf();
  const Window f = Window::hermite(1);
  const Window g = modulate(gauss(), 0.5);
  const TFArray w = tau_wigner_direct(f, g, 0.0, tf);
  double worst = 0.0;
  for (Index i = 64; i < 192; i += 3) {
    for (Index k = 64; k < 192; k += 5) {
      const double x = tf.time.node(std::size_t(i));
      const double xi = tf.freq.node(std::size_t(k));
      const cdouble ghat = gauss()(xi - 0.5);
      const cdouble expected = f(x) * std::conj(ghat) * std::polar(1.0, -2.0 * kPi * x * xi);
      worst = std::max(worst, std::abs(w.values(i, k) - expected));
    }
  }
  EXPECT_LE(worst, 1e-7);
  const Window zero = scale(f, 0.0);
  EXPECT_EQ(tau_wigner_direct(zero, g, 0.3, tf).values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(WignerMetaplectic, StftPathMatchesDirect) {
  const TFGrid tf = default_tf();
  for (const Window &f : {gauss(), Window::hermite(2), modulate(translate(gauss(), 1.0), -0.5)}) {
    const TFArray a = wigner_metaplectic(f, gauss(), stft_factorization(), tf);
    const TFArray b = stft_direct(f, gauss(), tf);
    EXPECT_LE(max_abs_diff(a.values, b.values), 1e-8);
  }
}

TEST(WignerMetaplectic, TauPathMatchesDirect) {
  const TFGrid tf = default_tf();
  const Window f = Window::hermite(1, 1.2);
  const Window g = Window::chirped_gaussian(1.0, 0.3);
  for (double tau : {0.25, 1.0 / 3.0, 0.5, 0.75}) {
    const TFArray a = wigner_metaplectic(f, g, tau_factorization(tau), tf);
    const TFArray b = tau_wigner_direct(f, g, tau, tf);
    EXPECT_LE(max_abs_diff(a.values, b.values), 1e-6) << tau;
  }
  const TFArray w = wigner_metaplectic(gauss(), gauss(), tau_factorization(0.5), tf);
  EXPECT_NEAR(std::abs(w.values(128, 128) - 2.0), 0.0, 1e-10);
}

TEST(WignerMetaplectic, ChirpOnlyChangesPhase) {
  const TFGrid tf = default_tf();
  const Window f = Window::hermite(1);
  const WignerFactorization c = chirped();
  const WignerFactorization plain(Matrix::Zero(2, 2), c.e());
  const TFArray a = wigner_metaplectic(f, gauss(), c, tf);
  const TFArray b = wigner_metaplectic(f, gauss(), plain, tf);
  EXPECT_LE((a.values.cwiseAbs() - b.values.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GT(max_abs_diff(a.values, b.values), 1e-3);
}

TEST(WignerMetaplectic, PointEvaluationMatchesArray) {
  const TFGrid tf = default_tf();
  const Window f = Window::hermite(1);
  for (const WignerFactorization &fac : {tau_factorization(0.5), chirped()}) {
    const TFArray w = wigner_metaplectic(f, gauss(), fac, tf);
    for (auto [i, k] : {std::pair<Index, Index>{120, 135}, {140, 110}}) {
      const cdouble at = wigner_metaplectic_at(f, gauss(), fac, tf.time.node(std::size_t(i)),
                                               tf.freq.node(std::size_t(k)), Grid1D(4096, 32.0));
      EXPECT_LE(std::abs(at - w.values(i, k)), 1e-8);
    }
  }
}

TEST(Atoms, StftAtomIsTimeFrequencyShift) {
  const Grid1D grid = default_grid();
  const Window a = atom_apply(stft_factorization(), 1.25, -0.5, gauss());
  const Window b = modulate(translate(gauss(), 1.25), -0.5);
  EXPECT_LE(max_abs_diff(a.sample(grid).values, b.sample(grid).values), 1e-14);
  const Window back = atom_inverse_apply(stft_factorization(), 1.25, -0.5, b);
  EXPECT_LE(max_abs_diff(back.sample(grid).values, gauss().sample(grid).values), 1e-14);
}

TEST(Atoms, TauHalfAtOrigin) {
  const Grid1D grid = default_grid();
  const Window f = Window::hermite(1);
  const Window a = atom_apply(tau_factorization(0.5), 0.0, 0.0, f);
  EXPECT_LE(max_abs_diff(a.sample(grid).values, 2.0 * rescale(f, -1.0).sample(grid).values),
            1e-14);
}

TEST(Atoms, DualityWithDistribution) {
  const Grid1D pairing(4096, 32.0);
  const Window f = Window::hermite(1, 1.2);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const WignerFactorization &fac :
       {stft_factorization(), tau_factorization(0.5), tau_factorization(0.25), chirped()}) {
    for (int k = 0; k < 5; ++k) {
      const double x = u(rng);
      const double xi = u(rng);
      const cdouble w = wigner_metaplectic_at(f, gauss(), fac, x, xi, pairing);
      if (std::abs(w) < 1e-6) {
        continue;
      }
      const cdouble ip = inner_product(f, atom_apply(fac, x, xi, gauss()), pairing);
      EXPECT_LE(std::abs(w - ip) / std::abs(w), 1e-7) << x << " " << xi;
    }
  }
}

TEST(Atoms, ChirpedAtomIsPhaseMultiple) {
  // pi_B(z) = Phi_{-C}(z) pi_A(z) for B = V_C A.
  const Grid1D grid = default_grid();
  const WignerFactorization c = chirped();
  const WignerFactorization plain(Matrix::Zero(2, 2), c.e());
  const double x = 0.6;
  const double xi = -0.9;
  const double q = 0.3 * x * x + 2.0 * 0.1 * x * xi - 0.2 * xi * xi;
  const cdouble phi_minus_c = std::polar(1.0, -kPi * q);
  const ComplexVector a = atom_apply(c, x, xi, gauss()).sample(grid).values;
  const ComplexVector b = atom_apply(plain, x, xi, gauss()).sample(grid).values;
  EXPECT_LE(max_abs_diff(a, phi_minus_c * b), 1e-12);
}

TEST(Atoms, InverseRoundTrip) {
  const Grid1D grid = default_grid();
  const Window f = Window::hermite(2, 0.8);
  for (const WignerFactorization &fac : {tau_factorization(0.3), chirped()}) {
    const Window back = atom_inverse_apply(fac, 0.7, -1.1, atom_apply(fac, 0.7, -1.1, f));
    EXPECT_LE(max_abs_diff(back.sample(grid).values, f.sample(grid).values), 1e-12);
  }
}

TEST(Moyal, Examples) {
  const TFGrid tf = default_tf();
  const Window g = gauss();
  EXPECT_LE(moyal_residual(g, g, g, g, stft_factorization(), tf), 1e-4);
  EXPECT_LE(moyal_residual(g, g, g, g, tau_factorization(0.5), tf), 1e-4);
  const TFArray w1 = wigner_metaplectic(g, g, stft_factorization(), tf);
  const TFArray w2 = wigner_metaplectic(Window::hermite(1), g, stft_factorization(), tf);
  EXPECT_LE(std::abs(tf_inner_product(w1, w2)), 1e-4);
}

TEST(Moyal, EnergyIdentity) {
  const TFGrid tf = default_tf();
  for (const WignerFactorization &fac :
       {stft_factorization(), tau_factorization(0.5), tau_factorization(0.25), chirped()}) {
    EXPECT_NEAR(wigner_metaplectic(Window::hermite(2), gauss(), fac, tf).norm(), 1.0, 1e-3);
  }
}

TEST(Moyal, SignalFamily) {
  const TFGrid tf = default_tf();
  const auto family = signal_family_v1();
  for (const WignerFactorization &fac : {tau_factorization(1.0 / 3.0), chirped()}) {
    for (std::size_t i = 0; i < family.size(); i += 3) {
      const auto &f = family[i].window;
      const auto &phi = family[(i + 4) % family.size()].window;
      EXPECT_LE(moyal_residual(f, gauss(), phi, Window::hermite(1), fac, tf), 1e-4)
          << family[i].name;
    }
  }
}

TEST(Covariance, Examples) {
  const TFGrid tf = default_tf();
  const Window f = Window::hermite(1);
  EXPECT_LE(covariance_residual(stft_factorization(), f, gauss(), {0.0, 0.0}, tf), 1e-12);
  EXPECT_LE(covariance_residual(stft_factorization(), f, gauss(), {0.5, 0.5}, tf), 1e-8);
  EXPECT_LE(covariance_residual(tau_factorization(0.5), f, gauss(), {0.5, 0.5}, tf), 1e-6);
  EXPECT_LE(covariance_residual(tau_factorization(0.5), f, gauss(), {-1.0, 0.25}, tf), 1e-6);
  EXPECT_ERROR_CODE(covariance_residual(stft_factorization(), f, gauss(), {0.01, 0.0}, tf),
                    OffGridShift);
}

TFGrid tf128() { return {Grid1D(128, 16.0), Grid1D(128, 16.0)}; }

TEST(Inversion, Stft) {
  const Grid1D grid = default_grid();
  const Signal out =
      inversion_reconstruct(gauss(), gauss(), gauss(), stft_factorization(), tf128(), grid);
  EXPECT_LE(testing::relative_l2(out, gauss().sample(grid)), 1e-3);
  const Window shifted = translate(gauss(), 1.0);
  const Signal s =
      inversion_reconstruct(shifted, gauss(), gauss(), stft_factorization(), tf128(), grid);
  EXPECT_LE(testing::relative_l2(s, shifted.sample(grid)), 1e-3);
}

TEST(Inversion, TauHalf) {
  const Grid1D grid = default_grid();
  const Signal out =
      inversion_reconstruct(gauss(), gauss(), gauss(), tau_factorization(0.5), tf128(), grid);
  EXPECT_LE(testing::relative_l2(out, gauss().sample(grid)), 1e-2);
}

TEST(Inversion, ZeroAndDegenerate) {
  const Grid1D grid = default_grid();
  const Window zero = scale(gauss(), 0.0);
  const Signal out =
      inversion_reconstruct(zero, gauss(), gauss(), stft_factorization(), tf128(), grid);
  EXPECT_EQ(out.values.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_ERROR_CODE(inversion_reconstruct(gauss(), gauss(), Window::hermite(1),
                                          stft_factorization(), tf128(), grid),
                    DegeneratePair);
}

}  // namespace
}  // namespace metaframe
