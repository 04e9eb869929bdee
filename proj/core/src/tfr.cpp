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

#include "metaframe/tfr.hpp"

#include <algorithm>
#include <cmath>

#include "metaframe/error.hpp"

namespace metaframe {

namespace {

void require_d1(const BlockMatrix2d &e) {
  if (e.d() != 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "numerical transforms are implemented for d = 1 only");
  }
}

// exp(i pi z . C z) for the 2 x 2 chirp of a d = 1 factorization.
cdouble chirp_phase(const Matrix &c, double x, double xi) {
  const double q = c(0, 0) * x * x + (c(0, 1) + c(1, 0)) * x * xi + c(1, 1) * xi * xi;
  return std::polar(1.0, kPi * q);
}

// Samples of w on arbitrary abscissae.
ComplexVector eval_at(const Window &w, const Eigen::VectorXd &t) {
  ComplexVector out(t.size());
  for (Eigen::Index j = 0; j < t.size(); ++j) {
    out[j] = w(t[j]);
  }
  return out;
}

// phi(k, j) = exp(-2 pi i xi_k t_j).
ComplexMatrix fourier_kernel(const Grid1D &freq, const Grid1D &t) {
  ComplexMatrix phi(static_cast<Eigen::Index>(freq.size()),
                    static_cast<Eigen::Index>(t.size()));
  for (std::size_t k = 0; k < freq.size(); ++k) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      phi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
          std::polar(1.0, -2.0 * kPi * freq.node(k) * t.node(j));
    }
  }
  return phi;
}

}  // namespace

cdouble inner_product(const Window &f, const Window &g, const Grid1D &grid) {
  return inner_product(f.sample(grid), g.sample(grid));
}

TFArray tensor_eval(const Window &f, const Window &g, const BlockMatrix2d &e,
                    const TFGrid &tf) {
  require_d1(e);
  const Grid1D y = tf.integration_grid();
  const Matrix &m = e.matrix();
  const double amp = std::sqrt(std::abs(e.determinant()));
  const auto nx = static_cast<Eigen::Index>(tf.time.size());
  const auto ny = static_cast<Eigen::Index>(y.size());
  ComplexMatrix out(nx, ny);
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double x = tf.time.node(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < ny; ++j) {
      const double yy = y.node(static_cast<std::size_t>(j));
      const cdouble a = f(m(0, 0) * x + m(0, 1) * yy);
      if (a == cdouble{0.0, 0.0}) {
        out(i, j) = 0.0;
        continue;
      }
      out(i, j) = amp * a * std::conj(g(m(1, 0) * x + m(1, 1) * yy));
    }
  }
  return TFArray(TFGrid{tf.time, y}, std::move(out));
}

TFArray wigner_metaplectic(const Window &f, const Window &g,
                           const WignerFactorization &fac, const TFGrid &tf) {
  TFArray w = partial_fft2(tensor_eval(f, g, fac.e(), tf));
  // The transform lands on integration_grid().dual(), equal to tf.freq up
  // to rounding in the length; keep the caller's grid.
  w.grid = tf;
  if (!fac.totally_decomposable()) {
    const Matrix &c = fac.chirp();
    Eigen::Matrix2d c2;
    c2 << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
    return chirp_mul(w, c2);
  }
  return w;
}

cdouble wigner_metaplectic_at(const Window &f, const Window &g,
                              const WignerFactorization &fac, double x,
                              double xi, const Grid1D &y_grid) {
  require_d1(fac.e());
  const Matrix &m = fac.e().matrix();
  const double amp = std::sqrt(std::abs(fac.e().determinant()));
  cdouble acc{0.0, 0.0};
  for (std::size_t j = 0; j < y_grid.size(); ++j) {
    const double y = y_grid.node(j);
    const cdouble a = f(m(0, 0) * x + m(0, 1) * y);
    if (a == cdouble{0.0, 0.0}) {
      continue;
    }
    acc += a * std::conj(g(m(1, 0) * x + m(1, 1) * y)) *
           std::polar(1.0, -2.0 * kPi * xi * y);
  }
  acc *= amp * y_grid.spacing();
  if (!fac.totally_decomposable()) {
    acc *= chirp_phase(fac.chirp(), x, xi);
  }
  return acc;
}

TFArray stft_direct(const Window &f, const Window &g, const TFGrid &tf,
                    const Grid1D &t_grid) {
  const Eigen::VectorXd t = t_grid.nodes();
  const ComplexVector fv = eval_at(f, t);
  const auto nx = static_cast<Eigen::Index>(tf.time.size());
  ComplexMatrix u(nx, t.size());
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double x = tf.time.node(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < t.size(); ++j) {
      u(i, j) = fv[j] * std::conj(g(t[j] - x));
    }
  }
  ComplexMatrix out = t_grid.spacing() * (u * fourier_kernel(tf.freq, t_grid).transpose());
  return TFArray(tf, std::move(out));
}

TFArray stft_direct(const Window &f, const Window &g, const TFGrid &tf) {
  return stft_direct(f, g, tf, tf.integration_grid());
}

TFArray tau_wigner_direct(const Window &f, const Window &g, double tau,
                          const TFGrid &tf) {
  const Grid1D tg = tf.integration_grid();
  const Eigen::VectorXd t = tg.nodes();
  const auto nx = static_cast<Eigen::Index>(tf.time.size());
  ComplexMatrix u(nx, t.size());
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double x = tf.time.node(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < t.size(); ++j) {
      u(i, j) = f(x + tau * t[j]) * std::conj(g(x - (1.0 - tau) * t[j]));
    }
  }
  ComplexMatrix out = tg.spacing() * (u * fourier_kernel(tf.freq, tg).transpose());
  return TFArray(tf, std::move(out));
}

Window atom_apply(const WignerFactorization &fac, double x, double xi,
                  const Window &g) {
  require_d1(fac.e());
  const double s = fac.rescale()(0, 0);
  const double shift = fac.schur()(0, 0) * x;
  const double mod = fac.modulation_map()(0, 0) * xi;
  cdouble factor = fac.alpha() * std::polar(1.0, -2.0 * kPi * fac.phase_matrix()(0, 0) * xi * x);
  if (!fac.totally_decomposable()) {
    factor *= std::conj(chirp_phase(fac.chirp(), x, xi));
  }
  return scale(modulate(translate(rescale(g, s), shift), mod), factor);
}

Window atom_inverse_apply(const WignerFactorization &fac, double x, double xi,
                          const Window &h) {
  require_d1(fac.e());
  const double s = fac.rescale()(0, 0);
  const double shift = fac.schur()(0, 0) * x;
  const double mod = fac.modulation_map()(0, 0) * xi;
  cdouble factor = fac.alpha_inverse() *
                   std::polar(1.0, 2.0 * kPi * fac.phase_matrix()(0, 0) * xi * x);
  if (!fac.totally_decomposable()) {
    factor *= chirp_phase(fac.chirp(), x, xi);
  }
  return scale(rescale(translate(modulate(h, -mod), -shift), 1.0 / s), factor);
}

double moyal_residual(const Window &f, const Window &g, const Window &phi,
                      const Window &psi, const WignerFactorization &fac,
                      const TFGrid &tf) {
  const TFArray w1 = wigner_metaplectic(f, g, fac, tf);
  const TFArray w2 = wigner_metaplectic(phi, psi, fac, tf);
  const cdouble lhs = tf_inner_product(w1, w2);
  const cdouble rhs = inner_product(f, phi, tf.time) *
                      std::conj(inner_product(g, psi, tf.time));
  return std::abs(lhs - rhs);
}

double covariance_residual(const WignerFactorization &fac, const Window &f,
                           const Window &g, const Eigen::Vector2d &w,
                           const TFGrid &tf) {
  require_d1(fac.e());
  const Matrix &ea = fac.shift_matrix();
  const double sx = ea(0, 0) * w[0] + ea(0, 1) * w[1];
  const double sxi = ea(1, 0) * w[0] + ea(1, 1) * w[1];
  const double ox = sx / tf.time.spacing();
  const double ok = sxi / tf.freq.spacing();
  if (std::abs(ox - std::round(ox)) > 1e-9 || std::abs(ok - std::round(ok)) > 1e-9) {
    throw Error(ErrorCode::OffGridShift,
                "E_A w does not land on TF nodes; choose w with E_A w on the grid");
  }
  const auto di = static_cast<Eigen::Index>(std::llround(ox));
  const auto dk = static_cast<Eigen::Index>(std::llround(ok));
  const Window shifted = modulate(translate(f, w[0]), w[1]);
  const TFArray w1 = wigner_metaplectic(shifted, g, fac, tf);
  const TFArray w0 = wigner_metaplectic(f, g, fac, tf);
  double worst = 0.0;
  const Eigen::Index nx = w1.values.rows();
  const Eigen::Index nk = w1.values.cols();
  for (Eigen::Index i = std::max<Eigen::Index>(0, di); i < std::min(nx, nx + di); ++i) {
    for (Eigen::Index k = std::max<Eigen::Index>(0, dk); k < std::min(nk, nk + dk); ++k) {
      worst = std::max(worst, std::abs(std::abs(w1.values(i, k)) -
                                       std::abs(w0.values(i - di, k - dk))));
    }
  }
  return worst;
}

Signal inversion_reconstruct(const Window &f, const Window &g,
                             const Window &gamma,
                             const WignerFactorization &fac, const TFGrid &tf,
                             const Grid1D &signal_grid) {
  const cdouble pairing = inner_product(gamma, g, signal_grid);
  if (std::abs(pairing) < 1e-10) {
    throw Error(ErrorCode::DegeneratePair, "<gamma, g> vanishes; choose another gamma");
  }
  const TFArray w = wigner_metaplectic(f, g, fac, tf);
  const double cutoff = 1e-16 * w.values.cwiseAbs().maxCoeff();
  ComplexVector acc = ComplexVector::Zero(static_cast<Eigen::Index>(signal_grid.size()));
  for (Eigen::Index i = 0; i < w.values.rows(); ++i) {
    const double x = tf.time.node(static_cast<std::size_t>(i));
    for (Eigen::Index k = 0; k < w.values.cols(); ++k) {
      const cdouble c = w.values(i, k);
      if (std::abs(c) <= cutoff) {
        continue;
      }
      const double xi = tf.freq.node(static_cast<std::size_t>(k));
      acc += c * atom_apply(fac, x, xi, gamma).sample(signal_grid).values;
    }
  }
  acc *= tf.cell_area() / pairing;
  return Signal(signal_grid, std::move(acc));
}

}  // namespace metaframe
