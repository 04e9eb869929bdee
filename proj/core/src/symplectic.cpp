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

#include "metaframe/symplectic.hpp"

#include <cmath>
#include <string>

#include "metaframe/error.hpp"

namespace metaframe {

namespace {

constexpr double kPredicateTol = 1e-10;
constexpr double kCertifyTol = 1e-12;
constexpr double kSymmetryTol = 1e-12;
constexpr double kSingularFloor = 1e-10;
constexpr double kReassemblyTol = 1e-9;

void require_even_square(const Matrix &s) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
    throw Error(ErrorCode::OddDimension,
                "expected a non-empty even-sized square matrix, got " +
                    std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  }
}

double max_abs(const Matrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Smallest and largest singular values.
std::pair<double, double> singular_extremes(const Matrix &m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto &sv = svd.singularValues();
  return {sv.minCoeff(), sv.maxCoeff()};
}

bool well_conditioned(const Matrix &m) {
  const auto [lo, hi] = singular_extremes(m);
  return hi > 0.0 && lo >= kSingularFloor * hi;
}

Matrix block_diag(const Matrix &a, const Matrix &b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

Matrix standard_j(Index half) {
  if (half < 1) {
    throw Error(ErrorCode::InvalidArgument, "standard_j needs half >= 1");
  }
  Matrix j = Matrix::Zero(2 * half, 2 * half);
  j.topRightCorner(half, half).setIdentity();
  j.bottomLeftCorner(half, half) = -Matrix::Identity(half, half);
  return j;
}

double symplectic_residual(const Matrix &s) {
  require_even_square(s);
  const Matrix j = standard_j(s.rows() / 2);
  return max_abs(s.transpose() * j * s - j);
}

bool is_symplectic(const Matrix &s) {
  const double scale = 1.0 + std::pow(max_abs(s), 2);
  return symplectic_residual(s) <= kPredicateTol * scale;
}

SymplecticMatrix::SymplecticMatrix(Matrix entries) : entries_(std::move(entries)) {
  const double scale = 1.0 + std::pow(max_abs(entries_), 2);
  const double residual = symplectic_residual(entries_);
  if (residual > kCertifyTol * scale) {
    throw Error(ErrorCode::NotSymplectic,
                "||S^T J S - J||_max = " + std::to_string(residual));
  }
  const double det = entries_.determinant();
  if (std::abs(det - 1.0) > 1e-9 * std::max(1.0, std::abs(det))) {
    throw Error(ErrorCode::NotSymplectic,
                "determinant " + std::to_string(det) + " differs from 1");
  }
}

Matrix SymplecticMatrix::block(Index i, Index j, Index block_size) const {
  return entries_.block(i * block_size, j * block_size, block_size, block_size);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &rhs) const {
  if (rhs.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "symplectic product size mismatch");
  }
  return SymplecticMatrix(entries_ * rhs.entries_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const Matrix j = standard_j(half());
  return SymplecticMatrix(-j * entries_.transpose() * j);
}

BlockMatrix2d::BlockMatrix2d(Matrix entries) : entries_(std::move(entries)) {
  require_even_square(entries_);
  const auto [lo, hi] = singular_extremes(entries_);
  if (hi == 0.0 || lo < kSingularFloor * hi) {
    throw Error(ErrorCode::SingularMatrix, "E is not invertible");
  }
  determinant_ = entries_.determinant();
  condition_ = hi / lo;
}

BlockMatrix2d BlockMatrix2d::from_blocks(const Matrix &e11, const Matrix &e12,
                                         const Matrix &e21, const Matrix &e22) {
  const Index d = e11.rows();
  for (const Matrix *b : {&e11, &e12, &e21, &e22}) {
    if (b->rows() != d || b->cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "E blocks must all be d x d");
    }
  }
  Matrix e(2 * d, 2 * d);
  e << e11, e12, e21, e22;
  return BlockMatrix2d(std::move(e));
}

bool is_right_regular(const BlockMatrix2d &e) {
  return well_conditioned(e.e12()) && well_conditioned(e.e22());
}

SymplecticMatrix make_de(const BlockMatrix2d &e) {
  return SymplecticMatrix(block_diag(e.matrix().inverse(), e.matrix().transpose()));
}

SymplecticMatrix make_vc(const Matrix &c) {
  if (c.rows() != c.cols() || c.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "chirp matrix must be square");
  }
  if (max_abs(c - c.transpose()) > kSymmetryTol) {
    throw Error(ErrorCode::NotSymmetric, "chirp matrix C is not symmetric");
  }
  const Index k = c.rows();
  Matrix v = Matrix::Identity(2 * k, 2 * k);
  v.bottomLeftCorner(k, k) = 0.5 * (c + c.transpose());
  return SymplecticMatrix(std::move(v));
}

SymplecticMatrix make_aft2(Index d) {
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument, "make_aft2 needs d >= 1");
  }
  const Matrix id = Matrix::Identity(d, d);
  Matrix a = Matrix::Zero(4 * d, 4 * d);
  a.block(0, 0, d, d) = id;
  a.block(d, 3 * d, d, d) = id;
  a.block(2 * d, 2 * d, d, d) = id;
  a.block(3 * d, d, d, d) = -id;
  return SymplecticMatrix(std::move(a));
}

WignerFactorization::WignerFactorization(const Matrix &chirp, BlockMatrix2d e)
    : e_(std::move(e)) {
  const Index d = e_.d();
  if (chirp.rows() != 2 * d || chirp.cols() != 2 * d) {
    throw Error(ErrorCode::DimensionMismatch,
                "chirp matrix must be 2d x 2d with d = " + std::to_string(d));
  }
  if (max_abs(chirp - chirp.transpose()) > kSymmetryTol) {
    throw Error(ErrorCode::NotSymmetric, "chirp matrix C is not symmetric");
  }
  chirp_ = 0.5 * (chirp + chirp.transpose());
  if (!is_right_regular(e_)) {
    throw Error(ErrorCode::NotRightRegular, "E12 or E22 is not invertible");
  }

  const Matrix e11 = e_.e11(), e12 = e_.e12(), e21 = e_.e21(), e22 = e_.e22();
  const Matrix e12_inv = e12.inverse();
  const Matrix e22_inv = e22.inverse();
  schur_ = e11 - e12 * e22_inv * e21;
  if (!well_conditioned(schur_)) {
    throw Error(ErrorCode::SingularSchur, "E11 - E12 E22^{-1} E21 is singular");
  }

  modulation_map_ = e12_inv.transpose();
  rescale_ = e22 * e12_inv;
  phase_matrix_ = e11.transpose() * e12_inv.transpose();
  shift_matrix_ = block_diag(schur_.inverse(), e12.transpose());
  lattice_map_ = block_diag(schur_, modulation_map_);

  const double det_e = std::abs(e_.determinant());
  alpha_ = std::sqrt(det_e) / std::sqrt(std::abs((e22 * e12).determinant()));
  alpha_inverse_ =
      1.0 / std::sqrt(std::abs(e_.determinant() * e12_inv.determinant() *
                               e22_inv.determinant()));
}

double WignerFactorization::bound_ratio() const {
  return std::abs((e_.e12() * e_.e22()).determinant()) /
         std::abs(e_.determinant());
}

SymplecticMatrix WignerFactorization::assembled() const {
  return make_vc(chirp_) * make_aft2(d()) * make_de(e_);
}

WignerFactorization make_factorization(const Matrix &chirp,
                                       const BlockMatrix2d &e) {
  return WignerFactorization(chirp, e);
}

std::optional<FactorPair> try_factor(const SymplecticMatrix &a) {
  if (a.size() % 4 != 0) {
    return std::nullopt;
  }
  const Index d = a.size() / 4;
  const Matrix &m = a.matrix();

  // Row blocks 2 and 3 of V_C A_FT2 D_E carry (E12^T E22^T) and, once the
  // chirp is taken block diagonal, (E11^T E21^T) verbatim.
  const Matrix q2 = m.block(d, 2 * d, d, 2 * d);
  const Matrix q1 = m.block(2 * d, 2 * d, d, 2 * d);
  Matrix e(2 * d, 2 * d);
  e.topLeftCorner(d, d) = q1.leftCols(d).transpose();
  e.bottomLeftCorner(d, d) = q1.rightCols(d).transpose();
  e.topRightCorner(d, d) = q2.leftCols(d).transpose();
  e.bottomRightCorner(d, d) = q2.rightCols(d).transpose();

  std::optional<BlockMatrix2d> be;
  try {
    be.emplace(e);
  } catch (const Error &) {
    return std::nullopt;
  }
  if (!is_right_regular(*be)) {
    return std::nullopt;
  }

  // Row block 2 of A is C11 P1 with P1 the top rows of E^{-1}; row block 3
  // ends with C22 Q2. Both P1 and Q2 have full row rank.
  const Matrix p1 = be->matrix().inverse().topRows(d);
  const Matrix c11 = m.block(2 * d, 0, d, 2 * d) * p1.transpose() *
                     (p1 * p1.transpose()).inverse();
  const Matrix c22 = m.block(3 * d, 2 * d, d, 2 * d) * q2.transpose() *
                     (q2 * q2.transpose()).inverse();
  Matrix c = block_diag(c11, c22);
  c = 0.5 * (c + c.transpose());

  try {
    const WignerFactorization fac(c, *be);
    const double residual = max_abs(fac.assembled().matrix() - m);
    if (residual > kReassemblyTol * (1.0 + max_abs(m))) {
      return std::nullopt;
    }
  } catch (const Error &) {
    return std::nullopt;
  }
  return FactorPair{std::move(c), std::move(*be)};
}

WignerFactorization stft_factorization(Index d) {
  const Matrix id = Matrix::Identity(d, d);
  const Matrix zero = Matrix::Zero(d, d);
  return WignerFactorization(Matrix::Zero(2 * d, 2 * d),
                             BlockMatrix2d::from_blocks(zero, id, -id, id));
}

WignerFactorization tau_factorization(double tau, Index d) {
  if (tau == 0.0 || tau == 1.0) {
    throw Error(ErrorCode::TauDegenerate,
                "tau-Wigner factorization requires tau not in {0, 1}");
  }
  const Matrix id = Matrix::Identity(d, d);
  return WignerFactorization(
      Matrix::Zero(2 * d, 2 * d),
      BlockMatrix2d::from_blocks(id, tau * id, id, -(1.0 - tau) * id));
}

}  // namespace metaframe
