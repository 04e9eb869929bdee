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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace metaframe {

using cdouble = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform centered grid x_k = (k - n/2) h, h = L / n, k = 0..n-1.
///
/// n must be a power of two with n >= 16. The dual grid has the same number
/// of nodes and spacing 1 / L, so it is again a Grid1D of extent n / L.
class Grid1D {
 public:
  Grid1D(std::size_t n, double length);

  std::size_t size() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / static_cast<double>(n_); }
  double node(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(n_) / 2.0) * spacing();
  }
  Eigen::VectorXd nodes() const;
  double lower() const { return -length_ / 2.0; }
  /// Half-open extent [-L/2, L/2).
  bool contains(double t) const { return t >= lower() && t < -lower(); }

  Grid1D dual() const;

  /// Lengths compare with a 1e-12 relative slack so that dual().dual()
  /// round-trips.
  bool operator==(const Grid1D &other) const;

 private:
  std::size_t n_;
  double length_;
};

/// Samples of a finite-energy signal on a Grid1D.
struct Signal {
  Grid1D grid;
  ComplexVector values;

  Signal(Grid1D g, ComplexVector v);
  static Signal zeros(const Grid1D &g);

  /// (h sum |f_k|^2)^{1/2}.
  double norm() const;
};

/// Time axis and frequency axis of a time-frequency array. Transforms that
/// integrate over an auxiliary variable y use `integration_grid()`, the
/// grid whose dual is the frequency axis.
struct TFGrid {
  Grid1D time;
  Grid1D freq;

  Grid1D integration_grid() const { return freq.dual(); }
  double cell_area() const { return time.spacing() * freq.spacing(); }
  bool operator==(const TFGrid &other) const {
    return time == other.time && freq == other.freq;
  }
};

/// Complex values over a TFGrid; row m is time node m, column k is
/// frequency node k.
struct TFArray {
  TFGrid grid;
  ComplexMatrix values;

  TFArray(TFGrid g, ComplexMatrix v);

  /// L^2 norm over the plane by Riemann sum.
  double norm() const;
};

/// Riemann inner product <F, G> = dx dxi sum F conj(G). Grids must match.
cdouble tf_inner_product(const TFArray &f, const TFArray &g);

/// h sum f_k conj(g_k); throws GridMismatch for different grids.
cdouble inner_product(const Signal &f, const Signal &g);

/// Continuum-normalized Fourier transform on the dual grid:
/// F(xi_k) = h sum_j f(x_j) exp(-2 pi i xi_k x_j).
Signal fourier(const Signal &f);
/// Inverse of fourier(): f(x_j) = (1/L) sum_k F(xi_k) exp(2 pi i xi_k x_j).
Signal inverse_fourier(const Signal &f);

/// Row-wise fourier() along the second (frequency) axis. The input array
/// lives on (x, y); the output on (x, y.dual()).
TFArray partial_fft2(const TFArray &f);
TFArray inverse_partial_fft2(const TFArray &f);

/// Periodic trigonometric interpolant of a sampled signal, evaluated as zero
/// outside the grid extent [-L/2, L/2). The Nyquist term is split
/// symmetrically so real data interpolates to real values.
class BandlimitedInterpolant {
 public:
  explicit BandlimitedInterpolant(const Signal &s);

  cdouble operator()(double t) const;
  const Grid1D &grid() const { return grid_; }

 private:
  Grid1D grid_;
  ComplexVector coeffs_;  // c_m, DFT order, already divided by n
};

/// (T_a f)(t) = f(t - a), band-limited shift with zero extension.
Signal translate(const Signal &f, double a);
/// (M_b f)(t) = exp(2 pi i b t) f(t).
Signal modulate(const Signal &f, double b);
/// Pointwise multiplication by exp(i pi c t^2).
Signal chirp_mul(const Signal &f, double c);
/// |a|^{1/2} f(a t), band-limited resampling; throws ZeroScale for a = 0.
Signal rescale(const Signal &f, double a);
Signal scale(const Signal &f, cdouble factor);

/// Multiplies F(x, xi) by exp(i pi z . C z), z = (x, xi), C symmetric 2 x 2.
TFArray chirp_mul(const TFArray &f, const Eigen::Matrix2d &c);

}  // namespace metaframe
