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

#include <optional>

#include <Eigen/Dense>

namespace metaframe {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Returns J = [[0, I], [-I, 0]] of size 2 * half.
Matrix standard_j(Index half);

/// True iff ||S^T J S - J||_max <= 1e-10 (1 + ||S||_max^2). Throws
/// ErrorCode::OddDimension for non-square or odd-sized input.
bool is_symplectic(const Matrix &s);

/// ||S^T J S - J||_max, unscaled.
double symplectic_residual(const Matrix &s);

/// A 2k x 2k real matrix certified to satisfy S^T J S = J at construction.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix entries);

  /// k, where the matrix is 2k x 2k.
  Index half() const { return entries_.rows() / 2; }
  Index size() const { return entries_.rows(); }
  const Matrix &matrix() const { return entries_; }
  double operator()(Index r, Index c) const { return entries_(r, c); }

  /// The (i, j) block of side `block_size`.
  Matrix block(Index i, Index j, Index block_size) const;

  SymplecticMatrix operator*(const SymplecticMatrix &rhs) const;
  /// S^{-1} = -J S^T J.
  SymplecticMatrix inverse() const;

 private:
  Matrix entries_;
};

/// E in GL(2d, R) with its d x d blocks E11, E12, E21, E22.
class BlockMatrix2d {
 public:
  explicit BlockMatrix2d(Matrix entries);
  static BlockMatrix2d from_blocks(const Matrix &e11, const Matrix &e12,
                                   const Matrix &e21, const Matrix &e22);

  Index d() const { return entries_.rows() / 2; }
  const Matrix &matrix() const { return entries_; }
  Matrix e11() const { return entries_.topLeftCorner(d(), d()); }
  Matrix e12() const { return entries_.topRightCorner(d(), d()); }
  Matrix e21() const { return entries_.bottomLeftCorner(d(), d()); }
  Matrix e22() const { return entries_.bottomRightCorner(d(), d()); }

  double determinant() const { return determinant_; }
  double condition_number() const { return condition_; }

 private:
  Matrix entries_;
  double determinant_ = 0.0;
  double condition_ = 0.0;
};

/// E12 and E22 both invertible, decided by sigma_min >= 1e-10 sigma_max on
/// each block.
bool is_right_regular(const BlockMatrix2d &e);

/// D_E = diag(E^{-1}, E^T).
SymplecticMatrix make_de(const BlockMatrix2d &e);
/// V_C = [[I, 0], [C, I]]; C must be symmetric.
SymplecticMatrix make_vc(const Matrix &c);
/// Projection of the partial Fourier transform in the second variables,
/// a 4d x 4d matrix.
SymplecticMatrix make_aft2(Index d);

/// A = V_C A_FT2 D_E with E right-regular, together with every derived
/// quantity the atoms, frames and norm checks need.
///
/// Naming: `schur` is E11 - E12 E22^{-1} E21; `shift_matrix` is E_A, the
/// matrix governing |W_A(pi(w) f, g)| = |W_A(f, g)(. - E_A w)|;
/// `lattice_map` is the diagonal matrix that carries a metaplectic lattice
/// onto the equivalent classical Gabor lattice, and equals E_A^{-1}.
class WignerFactorization {
 public:
  WignerFactorization(const Matrix &chirp, BlockMatrix2d e);

  Index d() const { return e_.d(); }
  const Matrix &chirp() const { return chirp_; }
  const BlockMatrix2d &e() const { return e_; }
  bool totally_decomposable() const { return chirp_.isZero(0.0); }

  const Matrix &schur() const { return schur_; }
  const Matrix &shift_matrix() const { return shift_matrix_; }
  const Matrix &lattice_map() const { return lattice_map_; }

  /// alpha_E = |det E|^{1/2} |det(E22 E12)|^{-1/2}.
  double alpha() const { return alpha_; }
  /// |(det E)(det E12^{-1})(det E22^{-1})|^{-1/2}, computed independently
  /// of alpha(); the two multiply to one.
  double alpha_inverse() const { return alpha_inverse_; }

  /// E22 E12^{-1}: argument of the normalized rescaling in the atom.
  const Matrix &rescale() const { return rescale_; }
  /// E12^{-T}: frequency map of the atom.
  const Matrix &modulation_map() const { return modulation_map_; }
  /// E11^T E12^{-T}: phase matrix, the atom carries exp(-2 pi i P xi . x).
  const Matrix &phase_matrix() const { return phase_matrix_; }

  /// |det(E12 E22)| / |det E|, the factor relating metaplectic frame bounds
  /// to the bounds of the equivalent classical Gabor system.
  double bound_ratio() const;

  /// The 4d x 4d matrix V_C A_FT2 D_E.
  SymplecticMatrix assembled() const;

 private:
  Matrix chirp_;
  BlockMatrix2d e_;
  Matrix schur_;
  Matrix shift_matrix_;
  Matrix lattice_map_;
  Matrix rescale_;
  Matrix modulation_map_;
  Matrix phase_matrix_;
  double alpha_ = 0.0;
  double alpha_inverse_ = 0.0;
};

WignerFactorization make_factorization(const Matrix &chirp,
                                       const BlockMatrix2d &e);

struct FactorPair {
  Matrix chirp;
  BlockMatrix2d e;
};

/// Recognizes A = V_C A_FT2 D_E. The pair is not unique: an off-diagonal
/// chirp block can be traded for a shear of E, so the returned chirp is
/// always block diagonal. Returns nullopt unless the reassembled matrix
/// reproduces A within 1e-9 (1 + ||A||_max).
std::optional<FactorPair> try_factor(const SymplecticMatrix &a);

/// V_g f = F_2 T_{E_ST}(f (x) conj g) with E_ST = [[0, I], [-I, I]].
WignerFactorization stft_factorization(Index d = 1);
/// W_tau = F_2 T_{E_tau}(f (x) conj g) with
/// E_tau = [[I, tau I], [I, -(1 - tau) I]]; tau must avoid 0 and 1.
WignerFactorization tau_factorization(double tau, Index d = 1);

}  // namespace metaframe
