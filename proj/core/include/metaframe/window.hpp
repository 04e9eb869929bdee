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

#include <memory>
#include <optional>
#include <vector>

#include "metaframe/grid.hpp"

namespace metaframe {

/// p(t) exp(quad t^2 + lin t + offset) with a complex polynomial p.
///
/// The family is closed under translation, modulation, chirp multiplication
/// and normalized rescaling, which is what keeps metaplectic atoms of
/// Gaussian/Hermite windows exact at arbitrary points.
struct GaussTerm {
  std::vector<cdouble> poly;  // poly[k] multiplies t^k
  cdouble quad{0.0, 0.0};
  cdouble lin{0.0, 0.0};
  cdouble offset{0.0, 0.0};

  cdouble operator()(double t) const;
};

/// A 1-D window or signal, either a finite sum of GaussTerm (analytic,
/// evaluable anywhere) or samples on a Grid1D.
class Window {
 public:
  /// (2/sigma^2)^{1/4} exp(-pi t^2 / sigma^2), unit L^2 norm.
  static Window gaussian(double sigma = 1.0);
  /// sigma^{-1/2} h_m(t / sigma) with the orthonormal Hermite functions
  /// h_m(u) = 2^{1/4} (2^m m!)^{-1/2} H_m(sqrt(2 pi) u) exp(-pi u^2).
  static Window hermite(int order, double sigma = 1.0);
  /// gaussian(sigma) multiplied by exp(i pi c t^2).
  static Window chirped_gaussian(double sigma, double chirp_rate);
  static Window from_terms(std::vector<GaussTerm> terms);
  /// With `interpolate`, evaluation off the grid uses band-limited
  /// interpolation; without it only same-grid sampling is possible.
  static Window sampled(const Signal &s, bool interpolate = true);

  bool is_analytic() const { return !samples_.has_value(); }
  bool evaluable() const { return is_analytic() || interpolant_ != nullptr; }

  /// Throws InterpolationUnavailable for sampled windows without
  /// interpolation.
  cdouble operator()(double t) const;
  Signal sample(const Grid1D &grid) const;
  bool is_zero() const;

  const std::vector<GaussTerm> &terms() const { return terms_; }
  const Signal &samples() const;
  bool interpolation_enabled() const { return interpolant_ != nullptr; }

  /// Pointwise sum; analytic + analytic stays analytic, otherwise both are
  /// sampled on the sampled operand's grid.
  Window operator+(const Window &rhs) const;

 private:
  Window() = default;

  std::vector<GaussTerm> terms_;
  std::optional<Signal> samples_;
  std::shared_ptr<const BandlimitedInterpolant> interpolant_;
};

Window translate(const Window &f, double a);
Window modulate(const Window &f, double b);
Window chirp_mul(const Window &f, double c);
Window rescale(const Window &f, double a);
Window scale(const Window &f, cdouble factor);

}  // namespace metaframe
