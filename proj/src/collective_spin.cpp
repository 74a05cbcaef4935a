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

#include "spinfc/collective_spin.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "spinfc/errors.hpp"
#include "spinfc/special_functions.hpp"

namespace spinfc {

namespace {

void check_spin_count(int n_spins, int cap) {
  if (n_spins < 1 || n_spins > cap) {
    throw DomainError("number of environment spins must lie in [1, " + std::to_string(cap) +
                      "], got " + std::to_string(n_spins));
  }
}

// sign and log|x|^p for an integer power, with 0^0 = 1.
struct SignedLogPower {
  bool zero = false;
  int sign = 1;
  double log_magnitude = 0.0;
};

SignedLogPower signed_log_power(double x, int power) {
  SignedLogPower out;
  if (power == 0) return out;
  if (x == 0.0) {
    out.zero = true;
    return out;
  }
  out.sign = (x < 0.0 && power % 2 != 0) ? -1 : 1;
  out.log_magnitude = power * std::log(std::abs(x));
  return out;
}

}  // namespace

DickeBasis::DickeBasis(int n_spins) : n_spins_(n_spins) { check_spin_count(n_spins, kMaxSpins); }

CollectiveSpin build_basis(int n_spins) {
  DickeBasis basis(n_spins);
  const int dim = basis.dim();
  const double n = n_spins;

  CollectiveOperators ops;
  ops.j_plus = ComplexMatrix::Zero(dim, dim);
  for (int m = 0; m < n_spins; ++m) {
    ops.j_plus(m + 1, m) = std::sqrt((n - m) * (m + 1.0));
  }
  ops.j_minus = ops.j_plus.adjoint();
  ops.j_x = 0.5 * (ops.j_plus + ops.j_minus);
  ops.j_y = (ops.j_plus - ops.j_minus) / std::complex<double>(0.0, 2.0);
  ops.j_z = ComplexMatrix::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) ops.j_z(m, m) = basis.jz_eigenvalue(m);
  ops.j_squared_eigenvalue = basis.total_spin() * (basis.total_spin() + 1.0);

  return CollectiveSpin{basis, std::move(ops)};
}

WignerDMatrix::WignerDMatrix(int n_spins, double angle, RealMatrix elements)
    : n_spins_(n_spins), angle_(angle), elements_(std::move(elements)) {}

ExplicitSum wigner_d_explicit(int n_spins, int l, int m, double angle) {
  check_spin_count(n_spins, kMaxSpins);
  const int n = n_spins;
  if (l < 0 || l > n || m < 0 || m > n) {
    throw DomainError("d-matrix index out of range");
  }

  const double half_cos = std::cos(0.5 * angle);
  const double minus_half_sin = -std::sin(0.5 * angle);
  const double log_prefactor =
      0.5 * (log_factorial(m) + log_factorial(n - m) + log_factorial(l) + log_factorial(n - l));

  ExplicitSum out;
  const int k_min = std::max(0, m - l);
  const int k_max = std::min(m, n - l);
  for (int k = k_min; k <= k_max; ++k) {
    const SignedLogPower c = signed_log_power(half_cos, n + m - l - 2 * k);
    const SignedLogPower s = signed_log_power(minus_half_sin, l - m + 2 * k);
    if (c.zero || s.zero) continue;
    const double log_term = log_prefactor - log_factorial(n - l - k) - log_factorial(m - k) -
                            log_factorial(k + l - m) - log_factorial(k) + c.log_magnitude +
                            s.log_magnitude;
    const double magnitude = std::exp(log_term);
    const int sign = (k % 2 == 0 ? 1 : -1) * c.sign * s.sign;
    out.value += sign * magnitude;
    out.abs_sum += magnitude;
  }
  return out;
}

RealMatrix wigner_d_recursive(int n_spins, double angle) {
  check_spin_count(n_spins, kMaxSpins);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);

  // spin-1/2: columns are R|down>, R|up>.
  RealMatrix d(2, 2);
  d << c, s, -s, c;

  for (int n = 1; n < n_spins; ++n) {
    const int dim = n + 2;
    const double inv = 1.0 / (n + 1.0);
    std::vector<double> down(dim), up(dim);
    for (int m = 0; m < dim; ++m) {
      down[m] = std::sqrt((n + 1.0 - m) * inv);
      up[m] = std::sqrt(m * inv);
    }
    RealMatrix next = RealMatrix::Zero(dim, dim);
    for (int m = 0; m < dim; ++m) {
      for (int l = 0; l < dim; ++l) {
        double acc = 0.0;
        if (l <= n && m <= n) acc += down[l] * down[m] * d(l, m) * c;
        if (l <= n && m >= 1) acc += down[l] * up[m] * d(l, m - 1) * s;
        if (l >= 1 && m <= n) acc -= up[l] * down[m] * d(l - 1, m) * s;
        if (l >= 1 && m >= 1) acc += up[l] * up[m] * d(l - 1, m - 1) * c;
        next(l, m) = acc;
      }
    }
    d = std::move(next);
  }
  return d;
}

WignerDMatrix wigner_d(int n_spins, double angle) {
  check_spin_count(n_spins, kMaxSpins);
  if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
  return WignerDMatrix(n_spins, angle, wigner_d_recursive(n_spins, angle));
}

RotatedDickeState rotate_dicke(const DickeBasis& basis, double angle, int m) {
  if (!basis.contains(m)) {
    throw DomainError("Dicke excitation index " + std::to_string(m) + " outside [0, " +
                      std::to_string(basis.n_spins()) + "]");
  }
  const WignerDMatrix d = wigner_d(basis.n_spins(), angle);
  return RotatedDickeState{angle, m, d.elements().col(m)};
}

RealMatrix rotation_oracle(const CollectiveSpin& spin, double angle) {
  check_spin_count(spin.basis.n_spins(), kMaxOracleSpins);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(spin.ops.j_y);
  if (solver.info() != Eigen::Success) throw NumericalError("J_y eigendecomposition failed");

  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  ComplexVector phases(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    phases(i) = std::exp(std::complex<double>(0.0, -angle * eigenvalues(i)));
  }
  const ComplexMatrix& v = solver.eigenvectors();
  const ComplexMatrix u = v * phases.asDiagonal() * v.adjoint();

  const double max_imag = u.imag().cwiseAbs().maxCoeff();
  if (max_imag > 1e-10) {
    throw NumericalError("exp(-i theta J_y) has imaginary part " + std::to_string(max_imag));
  }
  return u.real();
}

}  // namespace spinfc
