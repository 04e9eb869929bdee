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

#include "metaframe/window.hpp"

#include <cmath>
#include <string>

#include "metaframe/error.hpp"

namespace metaframe {

namespace {

constexpr cdouble kI{0.0, 1.0};

std::vector<cdouble> shift_poly(const std::vector<cdouble> &p, double a) {
  // p(t - a) by repeated synthetic expansion of the binomials.
  std::vector<cdouble> out(p.size(), cdouble{0.0, 0.0});
  std::vector<double> binom(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    // binomial row k
    binom[0] = 1.0;
    for (std::size_t j = k; j >= 1; --j) {
      binom[j] = (j == k ? 1.0 : binom[j] + binom[j - 1]);
    }
    for (std::size_t j = 0; j <= k; ++j) {
      out[j] += p[k] * binom[j] * std::pow(-a, static_cast<double>(k - j));
    }
  }
  return out;
}

template <typename AnalyticOp, typename SampledOp>
Window apply(const Window &f, AnalyticOp analytic, SampledOp sampled) {
  if (f.is_analytic()) {
    std::vector<GaussTerm> terms = f.terms();
    for (auto &t : terms) {
      analytic(t);
    }
    return Window::from_terms(std::move(terms));
  }
  return Window::sampled(sampled(f.samples()), f.interpolation_enabled());
}

}  // namespace

cdouble GaussTerm::operator()(double t) const {
  cdouble p{0.0, 0.0};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    p = p * t + *it;
  }
  if (p == cdouble{0.0, 0.0}) {
    return p;
  }
  return p * std::exp(quad * t * t + lin * t + offset);
}

Window Window::gaussian(double sigma) { return hermite(0, sigma); }

Window Window::hermite(int order, double sigma) {
  if (order < 0 || !(sigma > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "hermite window needs order >= 0 and sigma > 0");
  }
  // Physicists' Hermite polynomials by the three-term recurrence.
  std::vector<double> prev{1.0};
  std::vector<double> cur{1.0};
  if (order >= 1) {
    cur = {0.0, 2.0};
    for (int m = 1; m < order; ++m) {
      std::vector<double> next(cur.size() + 1, 0.0);
      for (std::size_t k = 0; k < cur.size(); ++k) {
        next[k + 1] += 2.0 * cur[k];
      }
      for (std::size_t k = 0; k < prev.size(); ++k) {
        next[k] -= 2.0 * m * prev[k];
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  const double kappa = std::sqrt(2.0 * kPi) / sigma;
  const double norm = std::pow(2.0, 0.25) /
                      std::sqrt(std::pow(2.0, order) * std::tgamma(order + 1.0)) /
                      std::sqrt(sigma);
  GaussTerm term;
  term.poly.resize(cur.size());
  for (std::size_t k = 0; k < cur.size(); ++k) {
    term.poly[k] = norm * cur[k] * std::pow(kappa, static_cast<double>(k));
  }
  term.quad = -kPi / (sigma * sigma);
  return from_terms({std::move(term)});
}

Window Window::chirped_gaussian(double sigma, double chirp_rate) {
  return metaframe::chirp_mul(gaussian(sigma), chirp_rate);
}

Window Window::from_terms(std::vector<GaussTerm> terms) {
  for (const auto &t : terms) {
    if (t.quad.real() > 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "analytic window term grows at infinity (Re quad > 0)");
    }
  }
  Window w;
  w.terms_ = std::move(terms);
  return w;
}

Window Window::sampled(const Signal &s, bool interpolate) {
  Window w;
  w.samples_.emplace(s);
  if (interpolate) {
    w.interpolant_ = std::make_shared<const BandlimitedInterpolant>(s);
  }
  return w;
}

cdouble Window::operator()(double t) const {
  if (is_analytic()) {
    cdouble acc{0.0, 0.0};
    for (const auto &term : terms_) {
      acc += term(t);
    }
    return acc;
  }
  if (!interpolant_) {
    throw Error(ErrorCode::InterpolationUnavailable,
                "sampled window evaluated off its grid with interpolation disabled");
  }
  return (*interpolant_)(t);
}

Signal Window::sample(const Grid1D &grid) const {
  if (!is_analytic() && samples_->grid == grid) {
    return *samples_;
  }
  ComplexVector v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = (*this)(grid.node(k));
  }
  return Signal(grid, std::move(v));
}

bool Window::is_zero() const {
  if (!is_analytic()) {
    return samples_->values.isZero(0.0);
  }
  for (const auto &t : terms_) {
    for (const auto &c : t.poly) {
      if (c != cdouble{0.0, 0.0}) {
        return false;
      }
    }
  }
  return true;
}

const Signal &Window::samples() const {
  if (!samples_) {
    throw Error(ErrorCode::InvalidArgument, "analytic window has no samples");
  }
  return *samples_;
}

Window Window::operator+(const Window &rhs) const {
  if (is_analytic() && rhs.is_analytic()) {
    std::vector<GaussTerm> terms = terms_;
    terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
    return from_terms(std::move(terms));
  }
  const Grid1D grid = is_analytic() ? rhs.samples_->grid : samples_->grid;
  Signal sum = sample(grid);
  sum.values += rhs.sample(grid).values;
  return sampled(sum, interpolation_enabled() || rhs.interpolation_enabled());
}

Window translate(const Window &f, double a) {
  if (a == 0.0) {
    return f;
  }
  return apply(
      f,
      [a](GaussTerm &t) {
        t.poly = shift_poly(t.poly, a);
        t.offset += t.quad * a * a - t.lin * a;
        t.lin -= 2.0 * t.quad * a;
      },
      [a](const Signal &s) { return translate(s, a); });
}

Window modulate(const Window &f, double b) {
  if (b == 0.0) {
    return f;
  }
  return apply(
      f, [b](GaussTerm &t) { t.lin += 2.0 * kPi * kI * b; },
      [b](const Signal &s) { return modulate(s, b); });
}

Window chirp_mul(const Window &f, double c) {
  if (c == 0.0) {
    return f;
  }
  return apply(
      f, [c](GaussTerm &t) { t.quad += kI * kPi * c; },
      [c](const Signal &s) { return chirp_mul(s, c); });
}

Window rescale(const Window &f, double a) {
  if (a == 0.0) {
    throw Error(ErrorCode::ZeroScale, "rescaling by zero");
  }
  if (a == 1.0) {
    return f;
  }
  return apply(
      f,
      [a](GaussTerm &t) {
        const double norm = std::sqrt(std::abs(a));
        for (std::size_t k = 0; k < t.poly.size(); ++k) {
          t.poly[k] *= norm * std::pow(a, static_cast<double>(k));
        }
        t.quad *= a * a;
        t.lin *= a;
      },
      [a](const Signal &s) { return rescale(s, a); });
}

Window scale(const Window &f, cdouble factor) {
  return apply(
      f,
      [factor](GaussTerm &t) {
        for (auto &c : t.poly) {
          c *= factor;
        }
      },
      [factor](const Signal &s) { return scale(s, factor); });
}

}  // namespace metaframe
