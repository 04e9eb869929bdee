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

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "metaframe/grid.hpp"
#include "metaframe/symplectic.hpp"
#include "metaframe/window.hpp"

namespace metaframe {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Positive weight on R (one TF coordinate).
class Weight1D {
 public:
  enum class Kind { Constant, Polynomial, Exponential };

  static Weight1D constant(double c = 1.0);
  /// (1 + |t|)^s.
  static Weight1D polynomial(double s);
  /// exp(a |t|).
  static Weight1D exponential(double a);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  double operator()(double t) const;

 private:
  Weight1D(Kind k, double p) : kind_(k), param_(p) {}
  Kind kind_;
  double param_;
};

/// Positive weight on the TF plane.
class Weight {
 public:
  enum class Kind { Constant, Polynomial, Exponential, Product };

  static Weight constant(double c = 1.0);
  /// v_s(z) = (1 + |z|)^s with the Euclidean norm.
  static Weight polynomial(double s);
  /// exp(a |z|).
  static Weight exponential(double a);
  /// m(x, xi) = m_x(x) m_xi(xi).
  static Weight product(Weight1D m_x, Weight1D m_xi);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  double operator()(double x, double xi) const;
  const Weight1D &time_factor() const { return mx_; }
  const Weight1D &freq_factor() const { return mxi_; }

 private:
  Weight(Kind k, double p, Weight1D mx, Weight1D mxi)
      : kind_(k), param_(p), mx_(mx), mxi_(mxi) {}
  Kind kind_;
  double param_;
  Weight1D mx_;
  Weight1D mxi_;
};

/// Exponents in (0, inf] and a weight for L^{p,q}_m.
struct NormSpec {
  double p = 2.0;
  double q = 2.0;
  Weight weight = Weight::constant();

  bool quasi() const { return std::min(p, q) < 1.0; }
  void validate() const;
};

/// Exponents for W(F L^p_{m1}, L^q_{m2}): m1 weights frequency (inner
/// integral), m2 weights time (outer integral).
struct AmalgamSpec {
  double p = 2.0;
  double q = 2.0;
  Weight1D m1 = Weight1D::constant();
  Weight1D m2 = Weight1D::constant();

  void validate() const;
};

/// (int (int |F(x, xi)|^p m^p dx)^{q/p} dxi)^{1/q}, inner over time.
double mixed_norm(const TFArray &f, const NormSpec &spec);

/// (int (int |F(x, xi)|^p m1(xi)^p dxi)^{q/p} m2(x)^q dx)^{1/q}, inner over
/// frequency.
double amalgam_mixed_norm(const TFArray &f, const AmalgamSpec &spec);

/// The TF grid used for norm computations: n = 256, L = 16 on both axes.
TFGrid default_tf_grid();

/// mixed_norm of stft_direct(f, g). Throws ZeroWindow.
double modulation_norm(const Window &f, const Window &g, const NormSpec &spec,
                       const TFGrid &tf = default_tf_grid());

/// amalgam_mixed_norm of stft_direct(f, g). Throws ZeroWindow.
double amalgam_norm(const Window &f, const Window &g, const AmalgamSpec &spec,
                    const TFGrid &tf = default_tf_grid());

struct WeightCheck {
  bool holds = false;
  /// "constant", "polynomial", "numeric" or "violated".
  std::string certificate;
};

/// m(S x, E12^{-T} xi) comparable to m(x, xi), S the Schur complement.
WeightCheck weight_condition_check(const WignerFactorization &fac, const Weight &m);

/// m1 (x) m2 comparable to (m1 o (-E12^{-T})) (x) (m2 o S).
WeightCheck amalgam_weight_condition_check(const WignerFactorization &fac,
                                           const Weight1D &m1, const Weight1D &m2);

struct NamedWindow {
  std::string name;
  Window window;
};

/// Fixed 10-signal test family, version 1. Do not edit; add a v2 instead.
std::vector<NamedWindow> signal_family_v1();

struct EquivalenceReport {
  std::vector<double> ratios;
  double min = 0.0;
  double max = 0.0;
  double spread = 0.0;  // max / min
};

/// r(f) = |W_A(f, g)|_{L^{p,q}_m} / |f|_{M^{p,q}_m} over the family.
/// Throws WeightConditionFailed.
EquivalenceReport wa_modulation_equivalence(const WignerFactorization &fac,
                                            const std::vector<NamedWindow> &family,
                                            const Window &g, const NormSpec &spec,
                                            const TFGrid &tf = default_tf_grid());

/// r(f) = amalgam-order norm of W_A(f, g) with weights m1, m2 divided by
/// the Wiener amalgam norm of f. Throws WeightConditionFailed.
EquivalenceReport wa_amalgam_equivalence(const WignerFactorization &fac,
                                         const std::vector<NamedWindow> &family,
                                         const Window &g, const AmalgamSpec &spec,
                                         const TFGrid &tf = default_tf_grid());

}  // namespace metaframe
