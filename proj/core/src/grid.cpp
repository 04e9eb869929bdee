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

#include "metaframe/grid.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "fft.hpp"
#include "metaframe/error.hpp"

namespace metaframe {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::span<cdouble> as_span(ComplexVector &v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

// With centered nodes and n divisible by 4,
//   exp(-2 pi i xi_k x_j) = (-1)^{j+k} exp(-2 pi i jk / n),
// so the continuum transform is a DFT conjugated by alternating signs.
ComplexVector centered_dft(const ComplexVector &in, detail::FftDirection dir) {
  ComplexVector work = in;
  for (Eigen::Index j = 1; j < work.size(); j += 2) {
    work[j] = -work[j];
  }
  detail::dft_inplace(as_span(work), dir);
  for (Eigen::Index k = 1; k < work.size(); k += 2) {
    work[k] = -work[k];
  }
  return work;
}

// Signed frequency index of DFT bin m.
double signed_index(Eigen::Index m, Eigen::Index n) {
  return static_cast<double>(m <= n / 2 ? m : m - n);
}

}  // namespace

Grid1D::Grid1D(std::size_t n, double length) : n_(n), length_(length) {
  if (n < 16 || !is_power_of_two(n)) {
    throw Error(ErrorCode::InvalidGrid,
                "grid size must be a power of two >= 16, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorCode::InvalidGrid, "grid length must be positive and finite");
  }
}

Eigen::VectorXd Grid1D::nodes() const {
  Eigen::VectorXd x(static_cast<Eigen::Index>(n_));
  for (std::size_t k = 0; k < n_; ++k) {
    x[static_cast<Eigen::Index>(k)] = node(k);
  }
  return x;
}

bool Grid1D::operator==(const Grid1D &other) const {
  return n_ == other.n_ &&
         std::abs(length_ - other.length_) <= 1e-12 * std::max(length_, other.length_);
}

Grid1D Grid1D::dual() const {
  return Grid1D(n_, static_cast<double>(n_) / length_);
}

Signal::Signal(Grid1D g, ComplexVector v) : grid(g), values(std::move(v)) {
  if (static_cast<std::size_t>(values.size()) != grid.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "signal has " + std::to_string(values.size()) +
                    " samples for a grid of " + std::to_string(grid.size()));
  }
}

Signal Signal::zeros(const Grid1D &g) {
  return Signal(g, ComplexVector::Zero(static_cast<Eigen::Index>(g.size())));
}

double Signal::norm() const {
  return std::sqrt(grid.spacing() * values.squaredNorm());
}

TFArray::TFArray(TFGrid g, ComplexMatrix v) : grid(g), values(std::move(v)) {
  if (static_cast<std::size_t>(values.rows()) != grid.time.size() ||
      static_cast<std::size_t>(values.cols()) != grid.freq.size()) {
    throw Error(ErrorCode::LengthMismatch, "TF array shape does not match its grid");
  }
}

double TFArray::norm() const {
  return std::sqrt(grid.cell_area() * values.squaredNorm());
}

cdouble tf_inner_product(const TFArray &f, const TFArray &g) {
  if (!(f.grid == g.grid)) {
    throw Error(ErrorCode::GridMismatch, "TF arrays live on different grids");
  }
  // Eigen's dot() conjugates its first argument.
  return f.grid.cell_area() *
         g.values.reshaped().dot(f.values.reshaped());
}

cdouble inner_product(const Signal &f, const Signal &g) {
  if (!(f.grid == g.grid)) {
    throw Error(ErrorCode::GridMismatch, "signals live on different grids");
  }
  return f.grid.spacing() * g.values.dot(f.values);
}

Signal fourier(const Signal &f) {
  ComplexVector out = centered_dft(f.values, detail::FftDirection::Forward);
  out *= f.grid.spacing();
  return Signal(f.grid.dual(), std::move(out));
}

Signal inverse_fourier(const Signal &f) {
  // f lives on a dual grid of extent n / L0; its own spacing is 1 / L0.
  ComplexVector out = centered_dft(f.values, detail::FftDirection::Backward);
  out *= f.grid.spacing();
  return Signal(f.grid.dual(), std::move(out));
}

namespace {

TFArray rowwise(const TFArray &f, Signal (*transform)(const Signal &)) {
  const Grid1D y = f.grid.freq;
  ComplexMatrix out(f.values.rows(), f.values.cols());
  Grid1D out_axis = y.dual();
  for (Eigen::Index m = 0; m < f.values.rows(); ++m) {
    Signal row(y, f.values.row(m).transpose());
    out.row(m) = transform(row).values.transpose();
  }
  return TFArray(TFGrid{f.grid.time, out_axis}, std::move(out));
}

}  // namespace

TFArray partial_fft2(const TFArray &f) { return rowwise(f, &fourier); }

TFArray inverse_partial_fft2(const TFArray &f) {
  return rowwise(f, &inverse_fourier);
}

BandlimitedInterpolant::BandlimitedInterpolant(const Signal &s)
    : grid_(s.grid), coeffs_(s.values) {
  detail::dft_inplace(as_span(coeffs_), detail::FftDirection::Forward);
  coeffs_ /= static_cast<double>(coeffs_.size());
}

cdouble BandlimitedInterpolant::operator()(double t) const {
  if (!grid_.contains(t)) {
    return {0.0, 0.0};
  }
  const Eigen::Index n = coeffs_.size();
  const double u = (t - grid_.lower()) / grid_.length();
  // sum over m = -n/2+1 .. n/2-1 of c_m e^{2 pi i m u}, plus c_{n/2} cos(pi n u)
  const cdouble step = std::polar(1.0, 2.0 * kPi * u);
  cdouble phase = std::polar(1.0, 2.0 * kPi * u * static_cast<double>(-n / 2 + 1));
  cdouble acc{0.0, 0.0};
  for (Eigen::Index m = -n / 2 + 1; m < n / 2; ++m) {
    acc += coeffs_[m < 0 ? m + n : m] * phase;
    phase *= step;
  }
  acc += coeffs_[n / 2] * std::cos(kPi * static_cast<double>(n) * u);
  return acc;
}

Signal translate(const Signal &f, double a) {
  if (a == 0.0) {
    return f;
  }
  const Eigen::Index n = f.values.size();
  const double length = f.grid.length();
  ComplexVector spec = f.values;
  detail::dft_inplace(as_span(spec), detail::FftDirection::Forward);
  for (Eigen::Index m = 0; m < n; ++m) {
    if (m == n / 2) {
      spec[m] *= std::cos(kPi * static_cast<double>(n) * a / length);
    } else {
      spec[m] *= std::polar(1.0, -2.0 * kPi * signed_index(m, n) * a / length);
    }
  }
  detail::dft_inplace(as_span(spec), detail::FftDirection::Backward);
  spec /= static_cast<double>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!f.grid.contains(f.grid.node(static_cast<std::size_t>(k)) - a)) {
      spec[k] = 0.0;
    }
  }
  return Signal(f.grid, std::move(spec));
}

Signal modulate(const Signal &f, double b) {
  ComplexVector out = f.values;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    out[k] *= std::polar(1.0, 2.0 * kPi * b * f.grid.node(static_cast<std::size_t>(k)));
  }
  return Signal(f.grid, std::move(out));
}

Signal chirp_mul(const Signal &f, double c) {
  ComplexVector out = f.values;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    const double t = f.grid.node(static_cast<std::size_t>(k));
    out[k] *= std::polar(1.0, kPi * c * t * t);
  }
  return Signal(f.grid, std::move(out));
}

Signal rescale(const Signal &f, double a) {
  if (a == 0.0) {
    throw Error(ErrorCode::ZeroScale, "rescaling by zero");
  }
  if (a == 1.0) {
    return f;
  }
  const BandlimitedInterpolant interp(f);
  const double norm = std::sqrt(std::abs(a));
  ComplexVector out(f.values.size());
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    out[k] = norm * interp(a * f.grid.node(static_cast<std::size_t>(k)));
  }
  return Signal(f.grid, std::move(out));
}

Signal scale(const Signal &f, cdouble factor) {
  return Signal(f.grid, f.values * factor);
}

TFArray chirp_mul(const TFArray &f, const Eigen::Matrix2d &c) {
  if (std::abs(c(0, 1) - c(1, 0)) > 1e-12) {
    throw Error(ErrorCode::NotSymmetric, "TF chirp matrix is not symmetric");
  }
  ComplexMatrix out = f.values;
  for (Eigen::Index m = 0; m < out.rows(); ++m) {
    const double x = f.grid.time.node(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < out.cols(); ++k) {
      const double xi = f.grid.freq.node(static_cast<std::size_t>(k));
      const double q = c(0, 0) * x * x + 2.0 * c(0, 1) * x * xi + c(1, 1) * xi * xi;
      out(m, k) *= std::polar(1.0, kPi * q);
    }
  }
  return TFArray(f.grid, std::move(out));
}

}  // namespace metaframe
