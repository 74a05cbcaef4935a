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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spinfc/franck_condon.hpp"
#include "spinfc/model.hpp"

namespace spinfc {

/// F(omega, t) = sin^2(omega t) / omega^2, with F(0, t) = t^2.
double window(double omega, double t);

/// Resonant detuning of channel m -> n: E_{1,n} - E_{0,m} - D.
double resonance_detuning(const ModelParams& params, int m, int n);

/// First-order probability to reach |theta_1, n; 1> from |theta_0, m; 0> after
/// time t, driving at omega = D + detuning:
///   P = (Omega^2 / 2) F((omega_{1n,0m} - omega) / 2, t) |f_{m->n}|^2.
/// Meaningful only while P << 1.
double transition_probability(const ModelParams& params, const FcTable& fc, int m, int n,
                              double detuning, double t);
double transition_probability(const ModelParams& params, int m, int n, double detuning, double t);

/// Finite-time rate P(t)/t at t = window_time / omega_nu.
double rate(const ModelParams& params, const FcTable& fc, int m, int n, double detuning);
double rate(const ModelParams& params, int m, int n, double detuning);

/// Boltzmann populations of the s = 0 ladder, p_m ~ exp(-m omega_nu / k_B T).
struct ThermalWeights {
  double temperature = 0.0;
  RealVector weights;
  double partition = 0.0;
};

/// temperature is k_B T / (hbar omega_nu); +infinity gives equal weights.
ThermalWeights thermal_weights(int n_spins, double temperature);

struct SpectrumChannel {
  int m = 0;
  int n = 0;
  /// Initial-state population p_m (1 for the zero-temperature ground state).
  double weight = 1.0;
  double fc_squared = 0.0;
  double resonance = 0.0;
};

/// Absorption spectrum on a detuning grid. Rates and intensity are in units
/// of Omega^2 / (2 omega_nu); detunings in omega_nu.
class SpectrumGrid {
 public:
  SpectrumGrid(std::vector<double> detunings, std::vector<SpectrumChannel> channels,
               double window_time, double omega_nu);

  const std::vector<double>& detunings() const { return detunings_; }
  const std::vector<SpectrumChannel>& channels() const { return channels_; }
  const std::vector<double>& intensity() const { return intensity_; }
  double window_time() const { return window_time_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

  /// Unweighted k_{m->n} at one grid point.
  double channel_rate(std::size_t channel, std::size_t point) const;
  /// k_{m->n} evaluated at an arbitrary detuning.
  double channel_rate_at(std::size_t channel, double detuning) const;

 private:
  std::vector<double> detunings_;
  std::vector<SpectrumChannel> channels_;
  std::vector<double> intensity_;
  double window_time_;
  double omega_nu_;
  std::vector<std::string> warnings_;
};

/// Evenly spaced grid including both ends.
std::vector<double> linear_grid(double lo, double hi, int points);

/// +/-(1.2 (N/2)(omega_tilde_1 - omega_nu) + 5 omega_nu), 4001 points by default.
std::vector<double> default_detuning_grid(const ModelParams& params, int points = 4001);

/// Channels with |f|^2 below this are not evaluated.
inline constexpr double kNegligibleFcSquared = 1e-12;
/// Thermal populations at or below this are not evaluated.
inline constexpr double kNegligibleWeight = 1e-12;

/// I(Delta) = sum_n k_{0->n}(Delta) from the ground state |theta_0, 0; 0>.
SpectrumGrid spectrum_zero_t(const ModelParams& params, std::span<const double> detunings);

/// I(Delta) = sum_m p_m sum_n k_{m->n}(Delta) with Boltzmann p_m from
/// params.temperature. Throws DomainError for a non-positive temperature.
SpectrumGrid spectrum_thermal(const ModelParams& params, std::span<const double> detunings);

/// Trapezoidal integral of the total intensity over the grid.
double integrated_intensity(const SpectrumGrid& spectrum);
/// Trapezoidal integral of one weighted channel over the grid.
double integrated_channel(const SpectrumGrid& spectrum, std::size_t channel);

struct Peak {
  std::size_t index = 0;
  double detuning = 0.0;
  double height = 0.0;
};

Peak global_peak(const SpectrumGrid& spectrum);

/// Interior local maxima of the total intensity at least min_fraction of the
/// global maximum, sorted by detuning.
std::vector<Peak> local_maxima(const SpectrumGrid& spectrum, double min_fraction);

/// Suppression of spectrum a relative to b.
struct BlockadeMetric {
  double peak_ratio = 0.0;
  double integrated_ratio = 0.0;
};

/// Throws DomainError if the grids differ.
BlockadeMetric blockade_metric(const SpectrumGrid& a, const SpectrumGrid& b);

}  // namespace spinfc
