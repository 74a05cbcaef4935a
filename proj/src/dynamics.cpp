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

#include "spinfc/dynamics.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <complex>
#include <fmt/format.h>
#include <string>

#include "spinfc/errors.hpp"

namespace spinfc {

namespace {

using Complex = std::complex<double>;

void check_propagation_size(int n_spins) {
  if (n_spins < 1 || n_spins > kMaxPropagationSpins) {
    throw DomainError(fmt::format("dense propagation supports 1..{} spins, got {}",
                                  kMaxPropagationSpins, n_spins));
  }
}

double expectation(const ComplexMatrix& op, const ComplexVector& psi) {
  return psi.dot(op * psi).real();
}

// H0^(1) without the constant D, which only contributes a global phase.
RealMatrix tilted_environment(const CollectiveSpin& spin, const ModelParams& params) {
  return params.hyperfine * spin.ops.j_z.real() + params.omega_nu * spin.ops.j_x.real();
}

ComplexVector precession_initial_state(const CollectiveSpin& spin, const ModelParams& params) {
  const double theta0 = effective_environment(params, 0).theta_s;
  return rotate_dicke(spin.basis, theta0, 0).coefficients.cast<Complex>();
}

}  // namespace

Propagator::Propagator(const RealMatrix& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) throw NumericalError("Hamiltonian diagonalization failed");
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

ComplexVector Propagator::evolve(const ComplexVector& initial, double t) const {
  ComplexVector coefficients = vectors_.transpose().cast<Complex>() * initial;
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    coefficients(i) *= std::exp(Complex(0.0, -energies_(i) * t));
  }
  return vectors_.cast<Complex>() * coefficients;
}

RotatedFrameOperators rotated_frame_operators(const CollectiveOperators& ops, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return RotatedFrameOperators{c * ops.j_x + s * ops.j_z, -ops.j_y, s * ops.j_x - c * ops.j_z};
}

TrajectoryState precession_closed_form(const ModelParams& params, std::span<const double> times) {
  const double theta = rotation_angle_difference(params);
  const double omega_tilde = effective_environment(params, 1).omega_tilde;
  const double half_n = 0.5 * params.n_spins;

  TrajectoryState out;
  out.times.assign(times.begin(), times.end());
  for (const double t : times) {
    out.jx_rot.push_back(-half_n * std::cos(theta));
    out.jy_rot.push_back(half_n * std::sin(theta) * std::sin(omega_tilde * t));
    out.jz_rot.push_back(-half_n * std::sin(theta) * std::cos(omega_tilde * t));
  }
  return out;
}

TrajectoryState precession_numerical(const ModelParams& params, std::span<const double> times) {
  check_propagation_size(params.n_spins);
  const CollectiveSpin spin = build_basis(params.n_spins);
  const Propagator propagator(tilted_environment(spin, params));
  const RotatedFrameOperators frame =
      rotated_frame_operators(spin.ops, rotation_angle_difference(params));
  const ComplexVector initial = precession_initial_state(spin, params);

  TrajectoryState out;
  out.times.assign(times.begin(), times.end());
  for (const double t : times) {
    const ComplexVector psi = propagator.evolve(initial, t);
    out.jx_rot.push_back(expectation(frame.jx, psi));
    out.jy_rot.push_back(expectation(frame.jy, psi));
    out.jz_rot.push_back(expectation(frame.jz, psi));
  }
  return out;
}

double measure_precession_period(const ModelParams& params, double t_max, int samples) {
  check_propagation_size(params.n_spins);
  if (!(t_max > 0.0) || samples < 3) throw DomainError("period scan needs t_max > 0 and >= 3 samples");

  const CollectiveSpin spin = build_basis(params.n_spins);
  const Propagator propagator(tilted_environment(spin, params));
  const RotatedFrameOperators frame =
      rotated_frame_operators(spin.ops, rotation_angle_difference(params));
  const ComplexVector initial = precession_initial_state(spin, params);
  const auto jy_at = [&](double t) { return expectation(frame.jy, propagator.evolve(initial, t)); };

  std::vector<double> crossings;
  const double step = t_max / (samples - 1);
  double t_prev = step;
  double y_prev = jy_at(t_prev);
  for (int k = 2; k < samples; ++k) {
    const double t = k * step;
    const double y = jy_at(t);
    if ((y_prev < 0.0 && y >= 0.0) || (y_prev > 0.0 && y <= 0.0)) {
      const auto bracket =
          boost::math::tools::bisect(jy_at, t_prev, t, boost::math::tools::eps_tolerance<double>(50));
      crossings.push_back(0.5 * (bracket.first + bracket.second));
    }
    t_prev = t;
    y_prev = y;
  }
  if (crossings.size() < 2) {
    throw DomainError("fewer than two zero crossings of <J'_y>; lengthen the scan");
  }
  return 2.0 * (crossings.back() - crossings.front()) / (crossings.size() - 1.0);
}

PropagationResult drive_propagation(const ModelParams& params, double detuning,
                                    std::span<const double> times, int initial_m) {
  check_propagation_size(params.n_spins);
  const DickeBasis basis(params.n_spins);
  if (!basis.contains(initial_m)) throw DomainError("initial Dicke index out of range");
  const int dim = basis.dim();

  const RealMatrix ladder0 = wigner_d(params.n_spins, effective_environment(params, 0).theta_s).elements();
  const RealMatrix ladder1 = wigner_d(params.n_spins, effective_environment(params, 1).theta_s).elements();

  ComplexVector initial = ComplexVector::Zero(2 * dim);
  initial.head(dim) = ladder0.col(initial_m).cast<Complex>();

  const Propagator propagator(rotating_frame_hamiltonian(params, detuning));

  PropagationResult out;
  out.times.assign(times.begin(), times.end());
  for (const double t : times) {
    ComplexVector psi = propagator.evolve(initial, t);
    const double drift = std::abs(psi.norm() - 1.0);
    out.max_norm_drift = std::max(out.max_norm_drift, drift);
    if (drift > 1e-8) {
      throw NumericalError(fmt::format("norm drifted by {:.3e} at t = {}", drift, t));
    }
    RealMatrix pops(2, dim);
    pops.row(0) = (ladder0.transpose().cast<Complex>() * psi.head(dim)).cwiseAbs2().transpose();
    pops.row(1) = (ladder1.transpose().cast<Complex>() * psi.tail(dim)).cwiseAbs2().transpose();
    out.populations.push_back(std::move(pops));
    out.amplitudes.push_back(std::move(psi));
  }
  return out;
}

}  // namespace spinfc
