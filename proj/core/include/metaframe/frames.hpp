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
#include <string>
#include <vector>

#include "metaframe/grid.hpp"
#include "metaframe/symplectic.hpp"
#include "metaframe/window.hpp"

namespace metaframe {

using LatticePoint = Eigen::Vector2d;

/// Finite section of a lattice G Z^2, keeping points with
/// max(|l1|, |l2|) <= radius. Points are ordered lexicographically in the
/// integer coordinates (j, k).
class Lattice {
 public:
  /// Separable a Z x b Z.
  Lattice(double a, double b, double radius);
  /// General generator matrix; columns are the basis vectors.
  static Lattice from_generator(const Eigen::Matrix2d &generator, double radius);

  double a() const { return generator_(0, 0); }
  double b() const { return generator_(1, 1); }
  double radius() const { return radius_; }
  const Eigen::Matrix2d &generator() const { return generator_; }
  bool separable() const;

  const std::vector<LatticePoint> &points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Image m . Lambda of the same finite point set (no re-truncation).
  Lattice mapped(const Eigen::Matrix2d &m) const;

 private:
  Lattice() = default;
  void enumerate();

  Eigen::Matrix2d generator_ = Eigen::Matrix2d::Identity();
  double radius_ = 0.0;
  std::vector<LatticePoint> points_;
};

/// Classical atoms M_xi T_x g, or metaplectic atoms pi_A(x, xi) g.
struct AtomKind {
  std::optional<WignerFactorization> fac;

  static AtomKind classical() { return {}; }
  static AtomKind metaplectic(const WignerFactorization &f) { return {f}; }
  bool is_metaplectic() const { return fac.has_value(); }
};

class GaborSystem {
 public:
  GaborSystem(Window window, Lattice lattice, AtomKind kind, Grid1D grid);

  const Window &window() const { return window_; }
  const Lattice &lattice() const { return lattice_; }
  const AtomKind &kind() const { return kind_; }
  const Grid1D &grid() const { return grid_; }

  /// n x K matrix, column i holds the atom at lattice point i.
  const ComplexMatrix &atoms() const { return atoms_; }
  std::size_t atom_count() const { return static_cast<std::size_t>(atoms_.cols()); }
  Signal atom(std::size_t i) const;

  /// The time-frequency operator of lattice point i applied to w.
  Window apply_atom(std::size_t i, const Window &w) const;

  /// Concatenation of two systems on the same grid; operators stay attached
  /// to their own atoms.
  GaborSystem unite(const GaborSystem &other) const;

 private:
  struct Part {
    AtomKind kind;
    std::size_t begin;
  };

  Window window_;
  Lattice lattice_;
  AtomKind kind_;
  Grid1D grid_;
  ComplexMatrix atoms_;
  std::vector<LatticePoint> points_;
  std::vector<Part> parts_;
};

/// Throws ZeroWindow for a vanishing window.
GaborSystem build_system(const Window &window, const Lattice &lattice,
                         const AtomKind &kind, const Grid1D &grid);

/// M = h A A^H, symmetrized.
ComplexMatrix frame_matrix(const GaborSystem &sys);

enum class BoundsMethod { Eigen, SumEstimate };

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  BoundsMethod method = BoundsMethod::Eigen;

  /// The verdict threshold A > 1e-8.
  bool frame() const { return lower > kFrameThreshold; }

  static constexpr double kFrameThreshold = 1e-8;
};

/// Extreme eigenvalues of the frame matrix restricted to signals supported
/// in [-interior, interior]; interior defaults to L/4.
FrameBounds frame_bounds(const GaborSystem &sys,
                         std::optional<double> interior = std::nullopt);

/// Gershgorin enclosure of the same restricted matrix: lower is clipped at
/// zero. Cheap, and brackets the eigen bounds.
FrameBounds frame_bounds_estimate(const GaborSystem &sys,
                                  std::optional<double> interior = std::nullopt);

struct TheoremMainReport {
  std::size_t atoms = 0;
  double expected_ratio = 0.0;
  double observed_ratio = 0.0;
  std::optional<double> lower_ratio;
  FrameBounds metaplectic;
  FrameBounds classical;
  double modulus_residual = 0.0;
  double vector_residual = 0.0;
  bool bounds_checked = false;
  std::string warning;

  bool atoms_ok() const;
  bool bounds_ok() const;
  bool passed() const { return atoms_ok() && bounds_ok(); }

  static constexpr double kAtomTolerance = 1e-8;
  static constexpr double kRatioTolerance = 0.02;
};

/// Compares the metaplectic system of g on lattice with the classical
/// system of T_{E22 E12^{-1}} g on E lattice. Bound ratios are skipped for
/// lattices of fewer than 9 points. Throws NotTotallyDecomposable.
TheoremMainReport theorem_main_check(const WignerFactorization &fac,
                                     const Window &window,
                                     const Lattice &lattice,
                                     const Grid1D &grid);

struct EnergyTransfer {
  double metaplectic = 0.0;  // sum |W_A(f, g)(l)|^2 by direct evaluation
  double classical = 0.0;    // sum |<f, pi(m) T g>|^2 over the mapped lattice
  double constant = 0.0;     // |det E| / |det(E12 E22)|
  double relative_residual() const;
};

EnergyTransfer energy_transfer(const WignerFactorization &fac,
                               const Window &window, const Lattice &lattice,
                               const Window &f, const Grid1D &grid);

/// c_l = <f, atom_l>.
ComplexVector coefficients(const GaborSystem &sys, const Signal &f);
/// sum_l c_l atom_l; throws LengthMismatch.
Signal synthesis(const GaborSystem &sys, const ComplexVector &c);

/// Canonical dual window S^{-1} g. Throws NotAFrame.
Window dual_window(const GaborSystem &sys);

/// gamma_A = T_{E12 E22^{-1}} S_A^{-1} T_{E22 E12^{-1}} g, so that
/// S_A^{-1} pi_A(l) g = pi_A(l) gamma_A on the full lattice. For a classical
/// system this is dual_window(). Throws NotAFrame.
Window metaplectic_dual(const GaborSystem &sys);

struct Reconstruction {
  Signal signal;
  double relative_error = 0.0;
};

/// sum_l <f, atom_l> (operator_l gamma) with gamma the system's dual.
/// Throws NotAFrame.
Reconstruction frame_reconstruct(const GaborSystem &sys, const Window &f);

}  // namespace metaframe
