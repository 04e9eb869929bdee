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

#include "metaframe/spaces.hpp"

#include <cmath>
#include <random>

#include "metaframe/error.hpp"
#include "metaframe/tfr.hpp"

namespace metaframe {

namespace {

void check_exponent(double p, const char *name) {
  if (!(p > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string("exponent ") + name + " must lie in (0, inf]");
  }
}

// Accumulates (sum_k |v_k|^p dt)^{1/p}, or max_k |v_k| for p = inf.
class LpAccumulator {
 public:
  LpAccumulator(double p, double dt) : p_(p), dt_(dt) {}
  void add(double v) {
    if (std::isinf(p_)) {
      acc_ = std::max(acc_, v);
    } else if (v > 0.0) {
      acc_ += std::pow(v, p_);
    }
  }
  double result() const {
    return std::isinf(p_) ? acc_ : std::pow(acc_ * dt_, 1.0 / p_);
  }

 private:
  double p_;
  double dt_;
  double acc_ = 0.0;
};

// Generic two-level norm. `inner_axis_rows` selects whether the inner
// integral runs over rows (time) or columns (frequency).
template <typename WeightFn>
double two_level_norm(const TFArray &f, double p, double q, bool inner_over_time,
                      WeightFn weight) {
  const Eigen::Index nx = f.values.rows();
  const Eigen::Index nk = f.values.cols();
  const double hx = f.grid.time.spacing();
  const double hk = f.grid.freq.spacing();
  const Eigen::Index outer_n = inner_over_time ? nk : nx;
  const Eigen::Index inner_n = inner_over_time ? nx : nk;
  LpAccumulator outer(q, inner_over_time ? hk : hx);
  for (Eigen::Index o = 0; o < outer_n; ++o) {
    LpAccumulator inner(p, inner_over_time ? hx : hk);
    for (Eigen::Index i = 0; i < inner_n; ++i) {
      const Eigen::Index m = inner_over_time ? i : o;
      const Eigen::Index k = inner_over_time ? o : i;
      const double x = f.grid.time.node(static_cast<std::size_t>(m));
      const double xi = f.grid.freq.node(static_cast<std::size_t>(k));
      inner.add(std::abs(f.values(m, k)) * weight(x, xi));
    }
    outer.add(inner.result());
  }
  return outer.result();
}

void require_nonzero(const Window &g) {
  if (g.is_zero()) {
    throw Error(ErrorCode::ZeroWindow, "analysis window vanishes identically");
  }
}

double schur_1d(const WignerFactorization &fac) { return fac.schur()(0, 0); }
double mod_1d(const WignerFactorization &fac) { return fac.modulation_map()(0, 0); }

// Ratio test of m(T z) / m(z) on a fixed pseudo-random sample of 200 points
// with |z| up to 50.
template <typename Ratio>
WeightCheck spot_check(Ratio ratio) {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> radius(0.0, 50.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  constexpr double kFactor = 1e3;
  for (int i = 0; i < 200; ++i) {
    const double r = radius(rng);
    const double t = angle(rng);
    const double v = ratio(r * std::cos(t), r * std::sin(t));
    if (!(v <= kFactor && v >= 1.0 / kFactor)) {
      return {false, "violated"};
    }
  }
  return {true, "numeric"};
}

bool is_moderate_1d(const Weight1D &w) {
  return w.kind() != Weight1D::Kind::Exponential || w.parameter() == 0.0;
}

EquivalenceReport summarize(std::vector<double> ratios) {
  EquivalenceReport r;
  r.ratios = std::move(ratios);
  if (r.ratios.empty()) {
    return r;
  }
  r.min = *std::min_element(r.ratios.begin(), r.ratios.end());
  r.max = *std::max_element(r.ratios.begin(), r.ratios.end());
  r.spread = r.max / r.min;
  return r;
}

}  // namespace

// Weights ---------------------------------------------------------------------

Weight1D Weight1D::constant(double c) {
  if (!(c > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "constant weight must be positive");
  }
  return {Kind::Constant, c};
}

Weight1D Weight1D::polynomial(double s) { return {Kind::Polynomial, s}; }
Weight1D Weight1D::exponential(double a) { return {Kind::Exponential, a}; }

double Weight1D::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return param_;
    case Kind::Polynomial:
      return std::pow(1.0 + std::abs(t), param_);
    case Kind::Exponential:
      return std::exp(param_ * std::abs(t));
  }
  return 1.0;
}

Weight Weight::constant(double c) {
  return {Kind::Constant, c, Weight1D::constant(c), Weight1D::constant()};
}

Weight Weight::polynomial(double s) {
  return {Kind::Polynomial, s, Weight1D::constant(), Weight1D::constant()};
}

Weight Weight::exponential(double a) {
  return {Kind::Exponential, a, Weight1D::constant(), Weight1D::constant()};
}

Weight Weight::product(Weight1D m_x, Weight1D m_xi) {
  return {Kind::Product, 0.0, m_x, m_xi};
}

double Weight::operator()(double x, double xi) const {
  switch (kind_) {
    case Kind::Constant:
      return param_;
    case Kind::Polynomial:
      return std::pow(1.0 + std::hypot(x, xi), param_);
    case Kind::Exponential:
      return std::exp(param_ * std::hypot(x, xi));
    case Kind::Product:
      return mx_(x) * mxi_(xi);
  }
  return 1.0;
}

void NormSpec::validate() const {
  check_exponent(p, "p");
  check_exponent(q, "q");
}

void AmalgamSpec::validate() const {
  check_exponent(p, "p");
  check_exponent(q, "q");
}

// Norms -----------------------------------------------------------------------

double mixed_norm(const TFArray &f, const NormSpec &spec) {
  spec.validate();
  return two_level_norm(f, spec.p, spec.q, true,
                        [&](double x, double xi) { return spec.weight(x, xi); });
}

double amalgam_mixed_norm(const TFArray &f, const AmalgamSpec &spec) {
  spec.validate();
  return two_level_norm(f, spec.p, spec.q, false,
                        [&](double x, double xi) { return spec.m1(xi) * spec.m2(x); });
}

TFGrid default_tf_grid() { return TFGrid{Grid1D(256, 16.0), Grid1D(256, 16.0)}; }

double modulation_norm(const Window &f, const Window &g, const NormSpec &spec,
                       const TFGrid &tf) {
  require_nonzero(g);
  return mixed_norm(stft_direct(f, g, tf), spec);
}

double amalgam_norm(const Window &f, const Window &g, const AmalgamSpec &spec,
                    const TFGrid &tf) {
  require_nonzero(g);
  return amalgam_mixed_norm(stft_direct(f, g, tf), spec);
}

// Weight conditions -----------------------------------------------------------

WeightCheck weight_condition_check(const WignerFactorization &fac, const Weight &m) {
  switch (m.kind()) {
    case Weight::Kind::Constant:
      return {true, "constant"};
    case Weight::Kind::Polynomial:
      // (1 + |Tz|) and (1 + |z|) are comparable for every invertible T.
      return {true, "polynomial"};
    case Weight::Kind::Product:
      if (is_moderate_1d(m.time_factor()) && is_moderate_1d(m.freq_factor())) {
        return {true, "polynomial"};
      }
      break;
    case Weight::Kind::Exponential:
      if (m.parameter() == 0.0) {
        return {true, "constant"};
      }
      break;
  }
  const double s = schur_1d(fac);
  const double e = mod_1d(fac);
  return spot_check([&](double x, double xi) { return m(s * x, e * xi) / m(x, xi); });
}

WeightCheck amalgam_weight_condition_check(const WignerFactorization &fac,
                                           const Weight1D &m1, const Weight1D &m2) {
  if (is_moderate_1d(m1) && is_moderate_1d(m2)) {
    const bool flat = m1.kind() != Weight1D::Kind::Polynomial &&
                      m2.kind() != Weight1D::Kind::Polynomial;
    return {true, flat ? "constant" : "polynomial"};
  }
  const double s = schur_1d(fac);
  const double e = mod_1d(fac);
  return spot_check([&](double x, double xi) {
    return m1(-e * xi) * m2(s * x) / (m1(xi) * m2(x));
  });
}

// Test family -----------------------------------------------------------------

std::vector<NamedWindow> signal_family_v1() {
  const Window g = Window::gaussian(1.0);
  std::vector<NamedWindow> out;
  out.push_back({"gauss_0.75", Window::gaussian(0.75)});
  out.push_back({"gauss_1", g});
  out.push_back({"gauss_1.5", Window::gaussian(1.5)});
  out.push_back({"hermite_1", Window::hermite(1)});
  out.push_back({"hermite_2", Window::hermite(2)});
  out.push_back({"hermite_3", Window::hermite(3)});
  out.push_back({"gauss_T1.5_M1", modulate(translate(g, 1.5), 1.0)});
  out.push_back({"gauss_T-1_M-1.5", modulate(translate(g, -1.0), -1.5)});
  out.push_back({"chirp_1", Window::chirped_gaussian(1.0, 1.0)});
  out.push_back({"two_bump", scale(translate(g, -1.5) + translate(g, 1.5), 1.0 / std::sqrt(2.0))});
  return out;
}

// Equivalences ----------------------------------------------------------------

EquivalenceReport wa_modulation_equivalence(const WignerFactorization &fac,
                                            const std::vector<NamedWindow> &family,
                                            const Window &g, const NormSpec &spec,
                                            const TFGrid &tf) {
  if (!weight_condition_check(fac, spec.weight).holds) {
    throw Error(ErrorCode::WeightConditionFailed,
                "weight is not comparable to its image under the shift map");
  }
  require_nonzero(g);
  std::vector<double> ratios;
  ratios.reserve(family.size());
  for (const auto &member : family) {
    const double wa = mixed_norm(wigner_metaplectic(member.window, g, fac, tf), spec);
    ratios.push_back(wa / modulation_norm(member.window, g, spec, tf));
  }
  return summarize(std::move(ratios));
}

EquivalenceReport wa_amalgam_equivalence(const WignerFactorization &fac,
                                         const std::vector<NamedWindow> &family,
                                         const Window &g, const AmalgamSpec &spec,
                                         const TFGrid &tf) {
  if (!amalgam_weight_condition_check(fac, spec.m1, spec.m2).holds) {
    throw Error(ErrorCode::WeightConditionFailed,
                "amalgam weights are not comparable to their images");
  }
  require_nonzero(g);
  std::vector<double> ratios;
  ratios.reserve(family.size());
  for (const auto &member : family) {
    const double wa = amalgam_mixed_norm(wigner_metaplectic(member.window, g, fac, tf), spec);
    ratios.push_back(wa / amalgam_norm(member.window, g, spec, tf));
  }
  return summarize(std::move(ratios));
}

}  // namespace metaframe
