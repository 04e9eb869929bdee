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

#include "metaframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "metaframe/error.hpp"
#include "metaframe/tfr.hpp"

namespace metaframe {

namespace {

Window operator_apply(const AtomKind &kind, const LatticePoint &p, const Window &w) {
  if (kind.is_metaplectic()) {
    return atom_apply(*kind.fac, p[0], p[1], w);
  }
  return modulate(translate(w, p[0]), p[1]);
}

std::vector<Eigen::Index> interior_indices(const Grid1D &grid, std::optional<double> interior) {
  const double r = interior.value_or(grid.length() / 4.0);
  std::vector<Eigen::Index> idx;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(grid.node(k)) <= r) {
      idx.push_back(static_cast<Eigen::Index>(k));
    }
  }
  return idx;
}

ComplexMatrix restricted(const ComplexMatrix &m, const std::vector<Eigen::Index> &idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      out(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

constexpr double kDualGrowthLimit = 1e6;

// Solves the frame-matrix system M x = rhs with an explicit residual check.
ComplexVector frame_solve(const GaborSystem &sys, const ComplexVector &rhs) {
  const FrameBounds bounds = frame_bounds(sys);
  if (!bounds.frame()) {
    throw Error(ErrorCode::NotAFrame,
                "lower frame bound " + std::to_string(bounds.lower) + " is below the threshold");
  }
  const ComplexMatrix m = frame_matrix(sys);
  const Eigen::LDLT<ComplexMatrix> ldlt(m);
  ComplexVector x = ldlt.solve(rhs);
  const double residual = (m * x - rhs).norm();
  if (ldlt.info() != Eigen::Success || !(residual <= 1e-10 * std::max(rhs.norm(), 1e-300))) {
    // LDLT without pivoting on a near-singular Gram matrix; retry with a
    // rank-revealing solver before giving up.
    x = m.completeOrthogonalDecomposition().solve(rhs);
    const double r2 = (m * x - rhs).norm();
    if (!(r2 <= 1e-10 * std::max(rhs.norm(), 1e-300))) {
      throw Error(ErrorCode::EigenFailure,
                  "frame operator solve residual " + std::to_string(r2) + " too large");
    }
  }
  // The verdict only covers interior signals; a Gram matrix that is singular
  // near the grid edges still "solves" but with an exploding dual.
  if (x.norm() * bounds.lower > kDualGrowthLimit * rhs.norm()) {
    throw Error(ErrorCode::EigenFailure,
                "dual solve is unstable: the frame matrix is singular outside the interior; "
                "enlarge the lattice radius");
  }
  return x;
}

}  // namespace

// Lattice ---------------------------------------------------------------------

Lattice::Lattice(double a, double b, double radius) {
  if (!(a > 0.0) || !(b > 0.0) || !(radius >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lattice needs a > 0, b > 0 and radius >= 0");
  }
  generator_ << a, 0.0, 0.0, b;
  radius_ = radius;
  enumerate();
}

Lattice Lattice::from_generator(const Eigen::Matrix2d &generator, double radius) {
  if (std::abs(generator.determinant()) < 1e-12 || !(radius >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lattice generator must be invertible");
  }
  Lattice l;
  l.generator_ = generator;
  l.radius_ = radius;
  l.enumerate();
  return l;
}

bool Lattice::separable() const {
  return generator_(0, 1) == 0.0 && generator_(1, 0) == 0.0;
}

void Lattice::enumerate() {
  // Integer coordinates satisfy |(j, k)|_inf <= |G^{-1}|_inf R.
  const Eigen::Matrix2d inv = generator_.inverse();
  const double bound = inv.cwiseAbs().rowwise().sum().maxCoeff() * radius_;
  const auto jmax = static_cast<long>(std::floor(bound + 1e-9));
  const double slack = 1e-12 * std::max(1.0, radius_);
  points_.clear();
  for (long j = -jmax; j <= jmax; ++j) {
    for (long k = -jmax; k <= jmax; ++k) {
      const LatticePoint p =
          generator_ * Eigen::Vector2d(static_cast<double>(j), static_cast<double>(k));
      if (p.cwiseAbs().maxCoeff() <= radius_ + slack) {
        points_.push_back(p);
      }
    }
  }
}

Lattice Lattice::mapped(const Eigen::Matrix2d &m) const {
  Lattice l;
  l.generator_ = m * generator_;
  l.radius_ = radius_;
  l.points_.reserve(points_.size());
  for (const auto &p : points_) {
    l.points_.push_back(m * p);
  }
  return l;
}

// GaborSystem -----------------------------------------------------------------

GaborSystem::GaborSystem(Window window, Lattice lattice, AtomKind kind, Grid1D grid)
    : window_(std::move(window)),
      lattice_(std::move(lattice)),
      kind_(std::move(kind)),
      grid_(grid),
      points_(lattice_.points()),
      parts_{Part{kind_, 0}} {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  atoms_.resize(n, static_cast<Eigen::Index>(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    atoms_.col(static_cast<Eigen::Index>(i)) =
        operator_apply(kind_, points_[i], window_).sample(grid_).values;
  }
}

Signal GaborSystem::atom(std::size_t i) const {
  return Signal(grid_, atoms_.col(static_cast<Eigen::Index>(i)));
}

Window GaborSystem::apply_atom(std::size_t i, const Window &w) const {
  auto part = parts_.begin();
  for (auto it = parts_.begin(); it != parts_.end(); ++it) {
    if (it->begin <= i) {
      part = it;
    }
  }
  return operator_apply(part->kind, points_.at(i), w);
}

GaborSystem GaborSystem::unite(const GaborSystem &other) const {
  if (!(grid_ == other.grid_)) {
    throw Error(ErrorCode::GridMismatch, "cannot unite systems on different grids");
  }
  GaborSystem out = *this;
  const auto offset = static_cast<std::size_t>(atoms_.cols());
  out.atoms_.conservativeResize(Eigen::NoChange, atoms_.cols() + other.atoms_.cols());
  out.atoms_.rightCols(other.atoms_.cols()) = other.atoms_;
  out.points_.insert(out.points_.end(), other.points_.begin(), other.points_.end());
  for (const auto &p : other.parts_) {
    out.parts_.push_back(Part{p.kind, p.begin + offset});
  }
  return out;
}

GaborSystem build_system(const Window &window, const Lattice &lattice,
                         const AtomKind &kind, const Grid1D &grid) {
  if (window.is_zero()) {
    throw Error(ErrorCode::ZeroWindow, "Gabor system window vanishes identically");
  }
  return GaborSystem(window, lattice, kind, grid);
}

// Frame operator --------------------------------------------------------------

ComplexMatrix frame_matrix(const GaborSystem &sys) {
  const ComplexMatrix &a = sys.atoms();
  ComplexMatrix m = sys.grid().spacing() * (a * a.adjoint());
  return 0.5 * (m + m.adjoint());
}

FrameBounds frame_bounds(const GaborSystem &sys, std::optional<double> interior) {
  const ComplexMatrix m = restricted(frame_matrix(sys), interior_indices(sys.grid(), interior));
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "frame matrix eigen-solve did not converge");
  }
  FrameBounds b;
  b.lower = std::max(0.0, eig.eigenvalues().minCoeff());
  b.upper = std::max(b.lower, eig.eigenvalues().maxCoeff());
  return b;
}

FrameBounds frame_bounds_estimate(const GaborSystem &sys, std::optional<double> interior) {
  const ComplexMatrix m = restricted(frame_matrix(sys), interior_indices(sys.grid(), interior));
  FrameBounds b;
  b.method = BoundsMethod::SumEstimate;
  b.lower = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double diag = m(i, i).real();
    const double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    b.lower = std::min(b.lower, diag - off);
    b.upper = std::max(b.upper, diag + off);
  }
  b.lower = std::max(0.0, b.lower);
  return b;
}

// Theorem main ----------------------------------------------------------------

bool TheoremMainReport::atoms_ok() const {
  return modulus_residual <= kAtomTolerance && vector_residual <= kAtomTolerance;
}

bool TheoremMainReport::bounds_ok() const {
  if (!bounds_checked) {
    return true;
  }
  if (std::abs(observed_ratio / expected_ratio - 1.0) > kRatioTolerance) {
    return false;
  }
  return !lower_ratio || std::abs(*lower_ratio / expected_ratio - 1.0) <= kRatioTolerance;
}

namespace {

void require_decomposable(const WignerFactorization &fac) {
  if (!fac.totally_decomposable()) {
    throw Error(ErrorCode::NotTotallyDecomposable,
                "the frame transfer needs a factorization with C = 0");
  }
  if (fac.d() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "frame checks are implemented for d = 1 only");
  }
}

Eigen::Matrix2d lattice_map_2x2(const WignerFactorization &fac) {
  const Matrix &m = fac.lattice_map();
  Eigen::Matrix2d out;
  out << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return out;
}

}  // namespace

TheoremMainReport theorem_main_check(const WignerFactorization &fac,
                                     const Window &window,
                                     const Lattice &lattice,
                                     const Grid1D &grid) {
  require_decomposable(fac);
  const GaborSystem meta = build_system(window, lattice, AtomKind::metaplectic(fac), grid);
  const Window dilated = rescale(window, fac.rescale()(0, 0));
  const GaborSystem classical = build_system(dilated, lattice.mapped(lattice_map_2x2(fac)),
                                             AtomKind::classical(), grid);

  TheoremMainReport r;
  r.atoms = meta.atom_count();
  r.expected_ratio = fac.bound_ratio();
  const double alpha = fac.alpha();
  const double p = fac.phase_matrix()(0, 0);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const LatticePoint &l = lattice.points()[i];
    const auto col = static_cast<Eigen::Index>(i);
    const auto am = meta.atoms().col(col);
    const auto ac = classical.atoms().col(col);
    r.modulus_residual = std::max(
        r.modulus_residual, (am.cwiseAbs() - alpha * ac.cwiseAbs()).cwiseAbs().maxCoeff());
    const cdouble phase = std::polar(1.0, -2.0 * kPi * p * l[1] * l[0]);
    r.vector_residual = std::max(r.vector_residual,
                                 (am / phase - alpha * ac).cwiseAbs().maxCoeff());
  }

  if (lattice.size() < 9) {
    r.warning = "lattice has fewer than 9 points; bound ratio not checked";
    return r;
  }
  r.bounds_checked = true;
  r.metaplectic = frame_bounds(meta);
  r.classical = frame_bounds(classical);
  r.observed_ratio = r.classical.upper / r.metaplectic.upper;
  if (r.metaplectic.frame() && r.classical.frame()) {
    r.lower_ratio = r.classical.lower / r.metaplectic.lower;
  } else {
    r.warning = "systems are not frames on this lattice; only upper bounds compared";
  }
  return r;
}

double EnergyTransfer::relative_residual() const {
  const double rhs = constant * classical;
  return std::abs(metaplectic - rhs) / std::max(std::abs(rhs), 1e-300);
}

EnergyTransfer energy_transfer(const WignerFactorization &fac,
                               const Window &window, const Lattice &lattice,
                               const Window &f, const Grid1D &grid) {
  require_decomposable(fac);
  EnergyTransfer out;
  out.constant = 1.0 / fac.bound_ratio();
  for (const auto &l : lattice.points()) {
    out.metaplectic += std::norm(wigner_metaplectic_at(f, window, fac, l[0], l[1], grid));
  }
  const Window dilated = rescale(window, fac.rescale()(0, 0));
  const GaborSystem classical = build_system(dilated, lattice.mapped(lattice_map_2x2(fac)),
                                             AtomKind::classical(), grid);
  out.classical = coefficients(classical, f.sample(grid)).squaredNorm();
  return out;
}

// Analysis and synthesis ------------------------------------------------------

ComplexVector coefficients(const GaborSystem &sys, const Signal &f) {
  if (!(f.grid == sys.grid())) {
    throw Error(ErrorCode::GridMismatch, "signal and system live on different grids");
  }
  return sys.grid().spacing() * (sys.atoms().adjoint() * f.values);
}

Signal synthesis(const GaborSystem &sys, const ComplexVector &c) {
  if (static_cast<std::size_t>(c.size()) != sys.atom_count()) {
    throw Error(ErrorCode::LengthMismatch,
                "coefficient vector has " + std::to_string(c.size()) + " entries for " +
                    std::to_string(sys.atom_count()) + " atoms");
  }
  return Signal(sys.grid(), sys.atoms() * c);
}

// Duals and reconstruction ----------------------------------------------------

Window dual_window(const GaborSystem &sys) {
  const ComplexVector g = sys.window().sample(sys.grid()).values;
  return Window::sampled(Signal(sys.grid(), frame_solve(sys, g)));
}

Window metaplectic_dual(const GaborSystem &sys) {
  if (!sys.kind().is_metaplectic()) {
    return dual_window(sys);
  }
  const double s = sys.kind().fac->rescale()(0, 0);
  const ComplexVector g = rescale(sys.window(), s).sample(sys.grid()).values;
  const Window solved = Window::sampled(Signal(sys.grid(), frame_solve(sys, g)));
  return rescale(solved, 1.0 / s);
}

Reconstruction frame_reconstruct(const GaborSystem &sys, const Window &f) {
  const Window gamma = metaplectic_dual(sys);
  const Signal fs = f.sample(sys.grid());
  const ComplexVector c = coefficients(sys, fs);
  ComplexVector acc = ComplexVector::Zero(fs.values.size());
  const double cutoff = 1e-16 * c.cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < sys.atom_count(); ++i) {
    const cdouble ci = c[static_cast<Eigen::Index>(i)];
    if (std::abs(ci) <= cutoff) {
      continue;
    }
    acc += ci * sys.apply_atom(i, gamma).sample(sys.grid()).values;
  }
  Signal rec(sys.grid(), std::move(acc));
  const double fn = fs.norm();
  const double err = Signal(sys.grid(), rec.values - fs.values).norm();
  return Reconstruction{rec, fn > 0.0 ? err / fn : err};
}

}  // namespace metaframe
