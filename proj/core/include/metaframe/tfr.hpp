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

#pragma once

#include "metaframe/grid.hpp"
#include "metaframe/symplectic.hpp"
#include "metaframe/window.hpp"

namespace metaframe {

/// Riemann inner product of two windows sampled on `grid`.
cdouble inner_product(const Window &f, const Window &g, const Grid1D &grid);

/// T_E(f (x) conj g)(x, y) = |det E|^{1/2} f(E11 x + E12 y) conj g(E21 x + E22 y)
/// on (tf.time, tf.integration_grid()). d = 1 only.
TFArray tensor_eval(const Window &f, const Window &g, const BlockMatrix2d &e,
                    const TFGrid &tf);

/// W_A(f, g) = Phi_C . F_2 T_E (f (x) conj g) sampled on tf. The chirp
/// factor is applied only when C != 0.
TFArray wigner_metaplectic(const Window &f, const Window &g,
                           const WignerFactorization &fac, const TFGrid &tf);

/// W_A(f, g)(x, xi) at one arbitrary point, by a direct Riemann sum over
/// y_grid (no FFT).
cdouble wigner_metaplectic_at(const Window &f, const Window &g,
                              const WignerFactorization &fac, double x,
                              double xi, const Grid1D &y_grid);

/// V_g f(x, xi) = <f, M_xi T_x g> by direct summation over t_grid at every
/// node of tf. Shares no code with wigner_metaplectic.
TFArray stft_direct(const Window &f, const Window &g, const TFGrid &tf,
                    const Grid1D &t_grid);
TFArray stft_direct(const Window &f, const Window &g, const TFGrid &tf);

/// int f(x + tau t) conj g(x - (1 - tau) t) e^{-2 pi i xi t} dt by direct
/// summation over tf.integration_grid(). Any real tau, including 0 and 1.
TFArray tau_wigner_direct(const Window &f, const Window &g, double tau,
                          const TFGrid &tf);

/// pi_A(x, xi) g: alpha_E e^{-2 pi i P xi x} M_{E12^{-T} xi} T_{S x}
/// T_{E22 E12^{-1}} g with S the Schur complement and P = E11^T E12^{-T},
/// premultiplied by Phi_{-C}(x, xi) when C != 0. Analytic in, analytic out.
Window atom_apply(const WignerFactorization &fac, double x, double xi,
                  const Window &g);

/// pi_A(x, xi)^{-1} h; also covers the chirped case, where the inverse
/// carries Phi_C(x, xi).
Window atom_inverse_apply(const WignerFactorization &fac, double x, double xi,
                          const Window &h);

/// |<W_A(f,g), W_A(phi,psi)> - <f,phi> conj <g,psi>|, TF integral by
/// Riemann sum over tf and signal inner products over tf.time.
double moyal_residual(const Window &f, const Window &g, const Window &phi,
                      const Window &psi, const WignerFactorization &fac,
                      const TFGrid &tf);

/// max | |W_A(pi(w) f, g)| - |W_A(f, g)(. - E_A w)| | over the overlap of
/// the two arrays. E_A w must land on TF nodes (ErrorCode::OffGridShift).
double covariance_residual(const WignerFactorization &fac, const Window &f,
                           const Window &g, const Eigen::Vector2d &w,
                           const TFGrid &tf);

/// Riemann realization of f = <gamma, g>^{-1} int W_A(f,g)(z) pi_A(z) gamma dz
/// over tf, sampled on signal_grid.
Signal inversion_reconstruct(const Window &f, const Window &g,
                             const Window &gamma,
                             const WignerFactorization &fac, const TFGrid &tf,
                             const Grid1D &signal_grid);

}  // namespace metaframe
