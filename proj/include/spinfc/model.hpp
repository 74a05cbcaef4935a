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

#include <limits>
#include <optional>
#include <string>

#include "spinfc/collective_spin.hpp"

namespace spinfc {

/// Physical constants of the central-spin model in units of the nuclear
/// Zeeman splitting omega_nu (omega_nu = 1 internally). Spectra are reported
/// against the detuning Delta = omega - D, so zfs never changes a computed
/// spectrum; it is kept for bookkeeping and the drive-strength check.
struct ModelParams {
  int n_spins = 50;
  double hyperfine = 0.2;
  double omega_nu = 1.0;
  double omega_el = 0.0;
  double zfs = 0.0;
  double rabi = 0.05;
  /// omega_nu * t used for finite-time rates.
  double window_time = 10.0;
  /// k_B T / (hbar omega_nu); infinity means equal Dicke-state populations.
  double temperature = std::numeric_limits<double>::infinity();
  /// Physical nuclear Zeeman frequency (Hz), used only to convert kelvin.
  double omega_nu_hz = 0.15e6;
};

/// NV-centre numbers: D = 2.87 GHz, omega_el = 211.35 MHz,
/// omega_nu = 0.15 MHz, Omega = D / 20, N = 50, A = 0.2 omega_nu, T = 300 K.
ModelParams nv_preset();

/// Throws DomainError if a field violates its range. Hyperfine A = 0 is
/// accepted (the naked-spin reference line).
void validate(const ModelParams& params);

/// k_B T / (h nu) for a temperature in kelvin and a frequency in Hz.
double temperature_ratio_from_kelvin(double kelvin, double frequency_hz);

/// Environment Hamiltonian with the central spin frozen in S_z = s:
/// H0^(s) = s A J_z + omega_nu J_x + s^2 D. Diagonal in the rotated Dicke
/// basis |theta_s, m>.
struct EffectiveEnvironment {
  int s = 0;
  double theta_s = 0.0;
  double omega_tilde = 0.0;
  double energy_offset = 0.0;
  RealVector eigenvalues;

  /// E_{s,m} = s^2 D + (m - N/2) omega_tilde.
  double energy(int m) const { return eigenvalues(m); }
};

EffectiveEnvironment effective_environment(const ModelParams& params, int s);

/// Matrix of H0^(s) over the unrotated Dicke basis.
RealMatrix environment_hamiltonian(const ModelParams& params, int s);

/// theta = theta_0 - theta_1 = arctan(A / omega_nu).
double rotation_angle_difference(const ModelParams& params);

/// Eigenvector |theta_s, m> of H0^(s).
RotatedDickeState rotated_eigenstate(const ModelParams& params, int s, int m);

/// Two-level drive after the rotating-wave approximation:
/// H1 = (Omega/sqrt 2) [|1><0| e^{-i omega t} + h.c.].
struct RwaDrive {
  double amplitude = 0.0;
  std::optional<std::string> warning;
};

RwaDrive rwa_drive(const ModelParams& params);

/// Time-independent Hamiltonian in the frame rotating at omega = D + detuning,
/// restricted to central-spin states {|0>, |1>}:
///   H0 - omega |1><1| + (Omega/sqrt 2)(|1><0| + |0><1|).
/// Product basis index s * (N + 1) + m. D is cancelled analytically.
RealMatrix rotating_frame_hamiltonian(const ModelParams& params, double detuning);

}  // namespace spinfc
