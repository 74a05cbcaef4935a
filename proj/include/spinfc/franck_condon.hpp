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

#include "spinfc/collective_spin.hpp"
#include "spinfc/model.hpp"

namespace spinfc {

/// Spin Franck-Condon factors f_{m->n} = <theta_1, n | theta_0, m> = d_{n,m}(theta),
/// theta = theta_0 - theta_1. Stored with sign; entry (n, m).
struct FcTable {
  int n_spins = 0;
  double theta = 0.0;
  RealMatrix factors;

  double operator()(int n, int m) const { return factors(n, m); }
  int dim() const { return static_cast<int>(factors.rows()); }
};

FcTable fc_table(const ModelParams& params);
FcTable fc_table(int n_spins, double theta);

/// Ground-state column in closed form:
/// f_{0->n} = sqrt(C(N, n)) cos(theta/2)^{N-n} (-sin(theta/2))^n.
/// Evaluated in log space; no cap on N.
RealVector fc_ground_column(int n_spins, double theta);

/// Bosonic (Holstein-Primakoff) limit: displacement between the two
/// conditional displaced-Fock ladders.
struct HpFcParams {
  /// |xi| = sqrt(N) A / (2 omega_nu)
  double displacement_magnitude = 0.0;
  /// |xi|^2, the Poisson intensity of the m = 0 progression
  double lambda = 0.0;
  /// delta x = sqrt(2) |xi|
  double delta_x = 0.0;
};

HpFcParams hp_params(const ModelParams& params);
HpFcParams hp_params_from_lambda(double lambda);

/// <xi_1, n | xi_0, m> = <n| D(xi) |m> with real xi = xi_0 - xi_1 >= 0:
///   n >= m:  e^{-xi^2/2} sqrt(m!/n!) xi^{n-m} L_m^{n-m}(xi^2)
///   n <  m:  e^{-xi^2/2} sqrt(n!/m!) (-xi)^{m-n} L_n^{m-n}(xi^2)
double hp_fc_factor(const HpFcParams& hp, int m, int n);

/// Most-favoured final level from the ground state.
struct FavoredLevel {
  int level = 0;
  /// Set when level - 1 is equally favoured (the predictor sits on an integer).
  bool tie = false;
  /// The continuous predictor ((N+1) sin^2(theta/2) or lambda).
  double predictor = 0.0;
};

/// Mode of Binomial(N, sin^2(theta/2)): |f_{0->n}| is maximal at
/// n_mf <= (N+1)(1 - cos theta)/2 <= n_mf + 1.
FavoredLevel favored_level_exact(const ModelParams& params);
FavoredLevel favored_level_exact(int n_spins, double theta);

/// Mode of Poisson(lambda): floor(lambda), tied with lambda - 1 when lambda
/// is a positive integer. The "rounding" of the bosonic rule is read as this
/// mode, which is what |<n|D(xi)|0>|^2 = e^{-lambda} lambda^n / n! peaks at.
FavoredLevel favored_level_hp(const HpFcParams& hp);

}  // namespace spinfc
