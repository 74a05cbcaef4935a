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

#include "spinfc/spectroscopy.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <utility>

#include "spinfc/errors.hpp"

namespace spinfc {

double window(double omega, double t) {
  const double phase = omega * t;
  if (std::abs(phase) < 1e-6) {
    // sin^2(x)/x^2 = 1 - x^2/3 + O(x^4)
    return t * t * (1.0 - phase * phase / 3.0);
  }
  const double s = std::sin(phase);
  return s * s / (omega * omega);
}

double resonance_detuning(const ModelParams& params, int m, int n) {
  const DickeBasis basis(params.n_spins);
  if (!basis.contains(m) || !basis.contains(n)) throw DomainError("channel index out of range");
  const double omega_tilde = effective_environment(params, 1).omega_tilde;
  return basis.jz_eigenvalue(n) * omega_tilde - basis.jz_eigenvalue(m) * params.omega_nu;
}

double transition_probability(const ModelParams& params, const FcTable& fc, int m, int n,
                              double detuning, double t) {
  const double offset = resonance_detuning(params, m, n) - detuning;
  const double f = fc(n, m);
  return 0.5 * params.rabi * params.rabi * window(0.5 * offset, t) * f * f;
}

double transition_probability(const ModelParams& params, int m, int n, double detuning, double t) {
  return transition_probability(params, fc_table(params), m, n, detuning, t);
}

double rate(const ModelParams& params, const FcTable& fc, int m, int n, double detuning) {
  const double t = params.window_time / params.omega_nu;
  return transition_probability(params, fc, m, n, detuning, t) / t;
}

double rate(const ModelParams& params, int m, int n, double detuning) {
  return rate(params, fc_table(params), m, n, detuning);
}

ThermalWeights thermal_weights(int n_spins, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  const DickeBasis basis(n_spins);
  ThermalWeights out;
  out.temperature = temperature;
  out.weights.resize(basis.dim());
  for (int m = 0; m < basis.dim(); ++m) {
    out.weights(m) = std::isinf(temperature) ? 1.0 : std::exp(-m / temperature);
  }
  out.partition = out.weights.sum();
  out.weights /= out.partition;
  return out;
}

SpectrumGrid::SpectrumGrid(std::vector<double> detunings, std::vector<SpectrumChannel> channels,
                           double window_time, double omega_nu)
    : detunings_(std::move(detunings)),
      channels_(std::move(channels)),
      intensity_(detunings_.size(), 0.0),
      window_time_(window_time),
      omega_nu_(omega_nu) {
  if (detunings_.empty()) throw DomainError("detuning grid is empty");
  if (!std::is_sorted(detunings_.begin(), detunings_.end())) {
    throw DomainError("detuning grid must be sorted");
  }
  for (std::size_t c = 0; c < channels_.size(); ++c) {
    const double weight = channels_[c].weight;
    for (std::size_t i = 0; i < detunings_.size(); ++i) {
      intensity_[i] += weight * channel_rate(c, i);
    }
  }
}

double SpectrumGrid::channel_rate_at(std::size_t channel, double detuning) const {
  const SpectrumChannel& ch = channels_.at(channel);
  const double t = window_time_ / omega_nu_;
  return omega_nu_ * window(0.5 * (ch.resonance - detuning), t) / t * ch.fc_squared;
}

double SpectrumGrid::channel_rate(std::size_t channel, std::size_t point) const {
  return channel_rate_at(channel, detunings_.at(point));
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (!(hi >= lo)) throw DomainError("grid upper bound below lower bound");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + i * step;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_detuning_grid(const ModelParams& params, int points) {
  const double omega_tilde = effective_environment(params, 1).omega_tilde;
  const double half_width =
      1.2 * 0.5 * params.n_spins * (omega_tilde - params.omega_nu) + 5.0 * params.omega_nu;
  return linear_grid(-half_width, half_width, points);
}

namespace {

SpectrumGrid assemble(const ModelParams& params, std::span<const double> detunings,
                      const RealVector& initial_weights) {
  validate(params);
  if (detunings.empty()) throw DomainError("detuning grid is empty");

  const FcTable fc = fc_table(params);
  std::vector<SpectrumChannel> channels;
  std::vector<std::string> warnings;
  const double lo = detunings.front();
  const double hi = detunings.back();
  for (int m = 0; m < initial_weights.size(); ++m) {
    const double weight = initial_weights(m);
    if (weight <= kNegligibleWeight) continue;
    for (int n = 0; n < fc.dim(); ++n) {
      const double f2 = fc(n, m) * fc(n, m);
      if (f2 < kNegligibleFcSquared) continue;
      const double resonance = resonance_detuning(params, m, n);
      channels.push_back(SpectrumChannel{m, n, weight, f2, resonance});
      if (f2 > 1e-4 && (resonance < lo || resonance > hi)) {
        warnings.push_back(fmt::format(
            "channel {}->{} (|f|^2 = {:.3g}) resonates at {:.6g}, outside the grid [{:.6g}, {:.6g}]",
            m, n, f2, resonance, lo, hi));
      }
    }
  }

  SpectrumGrid grid(std::vector<double>(detunings.begin(), detunings.end()), std::move(channels),
                    params.window_time, params.omega_nu);
  for (auto& w : warnings) grid.add_warning(std::move(w));
  return grid;
}

}  // namespace

SpectrumGrid spectrum_zero_t(const ModelParams& params, std::span<const double> detunings) {
  RealVector ground = RealVector::Zero(params.n_spins + 1);
  ground(0) = 1.0;
  return assemble(params, detunings, ground);
}

SpectrumGrid spectrum_thermal(const ModelParams& params, std::span<const double> detunings) {
  if (!(params.temperature > 0.0)) throw DomainError("thermal spectrum needs a positive temperature");
  return assemble(params, detunings, thermal_weights(params.n_spins, params.temperature).weights);
}

namespace {

template <typename Values>
double trapezoid(const std::vector<double>& x, const Values& y) {
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) total += 0.5 * (x[i] - x[i - 1]) * (y(i) + y(i - 1));
  return total;
}

}  // namespace

double integrated_intensity(const SpectrumGrid& spectrum) {
  const auto& y = spectrum.intensity();
  return trapezoid(spectrum.detunings(), [&](std::size_t i) { return y[i]; });
}

double integrated_channel(const SpectrumGrid& spectrum, std::size_t channel) {
  const double weight = spectrum.channels().at(channel).weight;
  return trapezoid(spectrum.detunings(),
                   [&](std::size_t i) { return weight * spectrum.channel_rate(channel, i); });
}

Peak global_peak(const SpectrumGrid& spectrum) {
  const auto& y = spectrum.intensity();
  const auto it = std::max_element(y.begin(), y.end());
  const auto index = static_cast<std::size_t>(it - y.begin());
  return Peak{index, spectrum.detunings()[index], *it};
}

std::vector<Peak> local_maxima(const SpectrumGrid& spectrum, double min_fraction) {
  const auto& y = spectrum.intensity();
  const double threshold = min_fraction * global_peak(spectrum).height;
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] >= y[i - 1] && y[i] > y[i + 1] && y[i] >= threshold) {
      peaks.push_back(Peak{i, spectrum.detunings()[i], y[i]});
    }
  }
  return peaks;
}

BlockadeMetric blockade_metric(const SpectrumGrid& a, const SpectrumGrid& b) {
  if (a.detunings() != b.detunings()) throw DomainError("spectra are on different detuning grids");
  BlockadeMetric out;
  out.peak_ratio = global_peak(a).height / global_peak(b).height;
  out.integrated_ratio = integrated_intensity(a) / integrated_intensity(b);
  return out;
}

}  // namespace spinfc
