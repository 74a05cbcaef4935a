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

#include "spinfc/model.hpp"

#include <cmath>
#include <string>

#include "spinfc/errors.hpp"

namespace spinfc {

namespace {

constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr double kPlanck = 6.62607015e-34;   // J s

void check_spin_projection(int s) {
  if (s < -1 || s > 1) throw DomainError("central-spin projection must be -1, 0 or +1");
}

}  // namespace

double temperature_ratio_from_kelvin(double kelvin, double frequency_hz) {
  if (!(kelvin > 0.0)) throw DomainError("temperature must be positive");
  if (!(frequency_hz > 0.0)) throw DomainError("reference frequency must be positive");
  return kBoltzmann * kelvin / (kPlanck * frequency_hz);
}

ModelParams nv_preset() {
  constexpr double omega_nu_mhz = 0.15;
  ModelParams p;
  p.n_spins = 50;
  p.hyperfine = 0.2;
  p.omega_nu = 1.0;
  p.omega_el = 211.35 / omega_nu_mhz;
  p.zfs = 2870.0 / omega_nu_mhz;
  p.rabi = p.zfs / 20.0;
  p.window_time = 10.0;
  p.omega_nu_hz = omega_nu_mhz * 1e6;
  p.temperature = temperature_ratio_from_kelvin(300.0, p.omega_nu_hz);
  return p;
}

void validate(const ModelParams& p) {
  if (p.n_spins < 1 || p.n_spins > kMaxSpins) {
    throw DomainError("n_spins must lie in [1, " + std::to_string(kMaxSpins) + "]");
  }
  if (!(p.hyperfine >= 0.0) || !std::isfinite(p.hyperfine)) {
    throw DomainError("hyperfine coupling must be finite and non-negative");
  }
  if (!(p.omega_nu > 0.0) || !std::isfinite(p.omega_nu)) {
    throw DomainError("omega_nu must be positive");
  }
  if (!(p.rabi > 0.0) || !std::isfinite(p.rabi)) throw DomainError("rabi must be positive");
  if (!(p.window_time > 0.0) || !std::isfinite(p.window_time)) {
    throw DomainError("window_time must be positive");
  }
  if (!(p.temperature > 0.0)) throw DomainError("temperature ratio must be positive");
  if (!std::isfinite(p.zfs) || !std::isfinite(p.omega_el)) {
    throw DomainError("zfs and omega_el must be finite");
  }
}

EffectiveEnvironment effective_environment(const ModelParams& params, int s) {
  check_spin_projection(s);
  const double longitudinal = s * params.hyperfine;

  EffectiveEnvironment env;
  env.s = s;
  env.omega_tilde = std::hypot(params.omega_nu, longitudinal);
  env.theta_s = std::atan2(params.omega_nu, longitudinal);
  env.energy_offset = s * s * params.zfs;

  const DickeBasis basis(params.n_spins);
  env.eigenvalues.resize(basis.dim());
  for (int m = 0; m < basis.dim(); ++m) {
    env.eigenvalues(m) = env.energy_offset + basis.jz_eigenvalue(m) * env.omega_tilde;
  }
  return env;
}

RealMatrix environment_hamiltonian(const ModelParams& params, int s) {
  check_spin_projection(s);
  const CollectiveSpin spin = build_basis(params.n_spins);
  RealMatrix h = s * params.hyperfine * spin.ops.j_z.real() + params.omega_nu * spin.ops.j_x.real();
  h.diagonal().array() += s * s * params.zfs;
  return h;
}

double rotation_angle_difference(const ModelParams& params) {
  return effective_environment(params, 0).theta_s - effective_environment(params, 1).theta_s;
}

RotatedDickeState rotated_eigenstate(const ModelParams& params, int s, int m) {
  const EffectiveEnvironment env = effective_environment(params, s);
  return rotate_dicke(DickeBasis(params.n_spins), env.theta_s, m);
}

RwaDrive rwa_drive(const ModelParams& params) {
  RwaDrive drive;
  drive.amplitude = params.rabi / std::sqrt(2.0);
  if (params.zfs > 0.0 && params.rabi > params.zfs / 10.0) {
    drive.warning = "drive strength Omega exceeds D/10; the rotating-wave reduction is unreliable";
  }
  return drive;
}

RealMatrix rotating_frame_hamiltonian(const ModelParams& params, double detuning) {
  const CollectiveSpin spin = build_basis(params.n_spins);
  const int dim = spin.basis.dim();
  const RealMatrix jx = spin.ops.j_x.real();
  const RealMatrix jz = spin.ops.j_z.real();
  const double coupling = rwa_drive(params).amplitude;

  RealMatrix h = RealMatrix::Zero(2 * dim, 2 * dim);
  h.topLeftCorner(dim, dim) = params.omega_nu * jx;
  h.bottomRightCorner(dim, dim) = params.hyperfine * jz + params.omega_nu * jx;
  h.bottomRightCorner(dim, dim).diagonal().array() -= detuning;
  h.topRightCorner(dim, dim).diagonal().setConstant(coupling);
  h.bottomLeftCorner(dim, dim).diagonal().setConstant(coupling);
  return h;
}

}  // namespace spinfc
