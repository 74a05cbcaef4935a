// Copyright 2026 The spinfc Authors
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

#include <Eigen/Dense>

namespace spinfc {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest environment size accepted by build_basis and wigner_d.
inline constexpr int kMaxSpins = 400;
/// Largest environment size accepted by the dense exp(-i theta J_y) oracle.
inline constexpr int kMaxOracleSpins = 100;

/// Symmetric (J = N/2) subspace of N spin-1/2 particles.
///
/// State |m> carries m excitations above the fully polarized state, so its
/// J_z eigenvalue is m - N/2, m = 0..N.
class DickeBasis {
 public:
  explicit DickeBasis(int n_spins);

  int n_spins() const { return n_spins_; }
  int dim() const { return n_spins_ + 1; }
  double total_spin() const { return 0.5 * n_spins_; }
  double jz_eigenvalue(int m) const { return m - 0.5 * n_spins_; }
  bool contains(int m) const { return m >= 0 && m <= n_spins_; }

 private:
  int n_spins_;
};

/// Dense collective operators J_alpha = sum_j I_alpha^(j) on a DickeBasis.
struct CollectiveOperators {
  ComplexMatrix j_plus;
  ComplexMatrix j_minus;
  ComplexMatrix j_x;
  ComplexMatrix j_y;
  ComplexMatrix j_z;
  double j_squared_eigenvalue = 0.0;
};

struct CollectiveSpin {
  DickeBasis basis;
  CollectiveOperators ops;
};

/// Builds the Dicke basis and its ladder/Cartesian operators.
/// Throws DomainError unless 1 <= n_spins <= kMaxSpins.
CollectiveSpin build_basis(int n_spins);

/// Wigner small-d matrix of spin N/2; entry (l, m) = <l| exp(-i theta J_y) |m>.
class WignerDMatrix {
 public:
  WignerDMatrix(int n_spins, double angle, RealMatrix elements);

  int n_spins() const { return n_spins_; }
  double angle() const { return angle_; }
  const RealMatrix& elements() const { return elements_; }
  double operator()(int l, int m) const { return elements_(l, m); }

 private:
  int n_spins_;
  double angle_;
  RealMatrix elements_;
};

/// One element of d^{N/2}(theta) from the closed factorial sum.
struct ExplicitSum {
  double value = 0.0;
  /// Sum of |term|; value loses roughly log10(abs_sum) digits to cancellation.
  double abs_sum = 0.0;
};

/// Closed factorial sum for d^{N/2}_{l,m}(theta), evaluated term by term in
/// log space with explicit sign tracking. The summation index runs over all k
/// that keep every factorial argument non-negative.
///
/// Accurate to ~1e-13 while abs_sum stays O(1). Interior elements at large N
/// cancel badly (abs_sum ~ 1e28 at N = 200, theta ~ 1), and even benign
/// elements carry ~1e-11 error at N = 200 from rounding in log(k!) ~ 1e3.
ExplicitSum wigner_d_explicit(int n_spins, int l, int m, double angle);

/// d^{N/2}(theta) built up one spin at a time: the symmetric state of N + 1
/// spins is a Clebsch-Gordan combination of |N; m> (x) |down> and
/// |N; m-1> (x) |up>, so d^{N+1} is a positively weighted combination of
/// d^{N} entries times spin-1/2 rotation amplitudes. No cancellation beyond
/// what the rotation itself requires; O(N^3).
RealMatrix wigner_d_recursive(int n_spins, double angle);

/// Small-d matrix from wigner_d_recursive; orthogonal to ~1e-14 for N <= 400.
WignerDMatrix wigner_d(int n_spins, double angle);

/// |theta, m> = exp(-i theta J_y)|m> expanded in the unrotated |l> basis.
struct RotatedDickeState {
  double angle = 0.0;
  int m = 0;
  RealVector coefficients;
};

RotatedDickeState rotate_dicke(const DickeBasis& basis, double angle, int m);

/// exp(-i theta J_y) by Hermitian eigendecomposition of J_y. Independent
/// check on wigner_d; throws NumericalError if an imaginary part exceeds
/// 1e-10 and DomainError above kMaxOracleSpins.
RealMatrix rotation_oracle(const CollectiveSpin& spin, double angle);

}  // namespace spinfc
