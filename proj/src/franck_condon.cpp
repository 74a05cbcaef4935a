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

#include "spinfc/franck_condon.hpp"

#include <algorithm>
#include <cmath>

#include "spinfc/errors.hpp"
#include "spinfc/special_functions.hpp"

namespace spinfc {

namespace {

constexpr double kIntegerTolerance = 1e-9;

FavoredLevel mode_from_predictor(double predictor, int max_level) {
  FavoredLevel out;
  out.predictor = predictor;
  const double nearest = std::round(predictor);
  if (nearest >= 1.0 && std::abs(predictor - nearest) < kIntegerTolerance) {
    out.level = static_cast<int>(nearest);
    out.tie = true;
  } else {
    out.level = static_cast<int>(std::floor(predictor));
  }
  if (max_level >= 0 && out.level > max_level) {
    out.level = max_level;
    out.tie = false;
  }
  return out;
}

}  // namespace

FcTable fc_table(int n_spins, double theta) {
  const WignerDMatrix d = wigner_d(n_spins, theta);
  return FcTable{n_spins, theta, d.elements()};
}

FcTable fc_table(const ModelParams& params) {
  return fc_table(params.n_spins, rotation_angle_difference(params));
}

RealVector fc_ground_column(int n_spins, double theta) {
  if (n_spins < 1) throw DomainError("n_spins must be positive");
  const double c = std::cos(0.5 * theta);
  const double s = -std::sin(0.5 * theta);
  RealVector column(n_spins + 1);
  for (int n = 0; n <= n_spins; ++n) {
    const int cos_power = n_spins - n;
    if ((c == 0.0 && cos_power > 0) || (s == 0.0 && n > 0)) {
      column(n) = 0.0;
      continue;
    }
    double log_mag = 0.5 * log_binomial(n_spins, n);
    if (cos_power > 0) log_mag += cos_power * std::log(std::abs(c));
    if (n > 0) log_mag += n * std::log(std::abs(s));
    int sign = 1;
    if (c < 0.0 && cos_power % 2 != 0) sign = -sign;
    if (s < 0.0 && n % 2 != 0) sign = -sign;
    column(n) = sign * std::exp(log_mag);
  }
  return column;
}

HpFcParams hp_params_from_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("Poisson intensity must be non-negative");
  HpFcParams hp;
  hp.lambda = lambda;
  hp.displacement_magnitude = std::sqrt(lambda);
  hp.delta_x = std::sqrt(2.0) * hp.displacement_magnitude;
  return hp;
}

HpFcParams hp_params(const ModelParams& params) {
  // xi_s = -sqrt(N) s A / (2 omega_nu); xi = xi_0 - xi_1.
  const double xi = std::sqrt(static_cast<double>(params.n_spins)) * params.hyperfine /
                    (2.0 * params.omega_nu);
  return hp_params_from_lambda(xi * xi);
}

double hp_fc_factor(const HpFcParams& hp, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("Fock indices must be non-negative");
  const double xi = hp.displacement_magnitude;
  const double x = hp.lambda;
  const int low = std::min(m, n);
  const int gap = std::abs(n - m);

  if (gap > 0 && xi == 0.0) return 0.0;
  const double poly = laguerre(low, gap, x);
  if (poly == 0.0) return 0.0;

  double log_mag = -0.5 * x + 0.5 * (log_factorial(low) - log_factorial(low + gap));
  if (gap > 0) log_mag += gap * std::log(xi);
  double value = std::exp(log_mag) * poly;
  if (n < m && gap % 2 != 0) value = -value;
  return value;
}

FavoredLevel favored_level_exact(int n_spins, double theta) {
  const double p = 0.5 * (1.0 - std::cos(theta));
  return mode_from_predictor((n_spins + 1.0) * p, n_spins);
}

FavoredLevel favored_level_exact(const ModelParams& params) {
  return favored_level_exact(params.n_spins, rotation_angle_difference(params));
}

FavoredLevel favored_level_hp(const HpFcParams& hp) { return mode_from_predictor(hp.lambda, -1); }

}  // namespace spinfc
