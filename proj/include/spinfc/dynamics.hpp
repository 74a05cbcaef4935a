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

#include <span>
#include <vector>

#include "spinfc/collective_spin.hpp"
#include "spinfc/model.hpp"

namespace spinfc {

/// Largest environment accepted by the dense propagators below.
inline constexpr int kMaxPropagationSpins = 100;

/// Exact evolution under a time-independent real symmetric Hamiltonian:
/// psi(t) = V exp(-i Lambda t) V^T psi(0).
class Propagator {
 public:
  explicit Propagator(const RealMatrix& hamiltonian);

  ComplexVector evolve(const ComplexVector& initial, double t) const;
  const RealVector& energies() const { return energies_; }

 private:
  RealVector energies_;
  RealMatrix vectors_;
};

/// Collective-spin expectation values in the frame where the s = 1
/// environment Hamiltonian reads omega_tilde J'_x.
struct TrajectoryState {
  std::vector<double> times;
  std::vector<double> jx_rot;
  std::vector<double> jy_rot;
  std::vector<double> jz_rot;
};

/// Rotated-frame operators for mixing-angle difference theta:
///   J'_x = cos(theta) J_x + sin(theta) J_z
///   J'_y = -J_y
///   J'_z = sin(theta) J_x - cos(theta) J_z
/// i.e. a rotation by -theta about y followed by a half turn about J'_x. The
/// half turn commutes with omega_tilde J'_x, so it leaves the dynamics
/// untouched and puts the initial point at J'_z = -(N/2) sin(theta).
struct RotatedFrameOperators {
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

RotatedFrameOperators rotated_frame_operators(const CollectiveOperators& ops, double theta);

/// Vertical-transition trajectory: |theta_0, 0> suddenly governed by H0^(1).
///   <J'_x> = -(N/2) cos(theta)
///   <J'_y> =  (N/2) sin(theta) sin(omega_tilde t)
///   <J'_z> = -(N/2) sin(theta) cos(omega_tilde t)
TrajectoryState precession_closed_form(const ModelParams& params, std::span<const double> times);

/// Same trajectory from exact propagation of |theta_0, 0> under the matrix
/// H0^(1). Throws DomainError above kMaxPropagationSpins.
TrajectoryState precession_numerical(const ModelParams& params, std::span<const double> times);

/// Mean precession period from the zero crossings of <J'_y>(t) on (0, t_max],
/// each crossing bracketed on a grid of `samples` points and refined by
/// bisection on the exactly propagated state.
double measure_precession_period(const ModelParams& params, double t_max, int samples);

/// Exact rotating-frame propagation of |theta_0, m; 0>.
struct PropagationResult {
  std::vector<double> times;
  std::vector<ComplexVector> amplitudes;
  /// populations[k](s, n) = |<theta_s, n; s | psi(t_k)>|^2, s in {0, 1}.
  std::vector<RealMatrix> populations;
  double max_norm_drift = 0.0;

  double population(std::size_t k, int s, int n) const { return populations[k](s, n); }
};

/// Throws NumericalError if the norm drifts by more than 1e-8.
PropagationResult drive_propagation(const ModelParams& params, double detuning,
                                    std::span<const double> times, int initial_m);

}  // namespace spinfc
