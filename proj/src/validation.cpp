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

#include "spinfc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <vector>

#include "spinfc/collective_spin.hpp"
#include "spinfc/dynamics.hpp"
#include "spinfc/franck_condon.hpp"
#include "spinfc/model.hpp"
#include "spinfc/spectroscopy.hpp"

namespace spinfc {

namespace {

using std::numbers::pi;

class Suite {
 public:
  void record(std::string name, double measured, double tolerance) {
    results_.push_back(PropertyResult{std::move(name), measured <= tolerance,
                                      fmt::format("measured {:.3e}, tolerance {:.1e}", measured, tolerance)});
  }
  void record_bool(std::string name, bool passed, std::string detail) {
    results_.push_back(PropertyResult{std::move(name), passed, std::move(detail)});
  }
  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::vector<PropertyResult> results_;
};

ModelParams coupling(int n_spins, double hyperfine) {
  ModelParams p;
  p.n_spins = n_spins;
  p.hyperfine = hyperfine;
  return p;
}

void operator_algebra(Suite& suite) {
  const std::complex<double> i(0.0, 1.0);
  double worst = 0.0;
  for (const int n : {1, 2, 5, 10, 50}) {
    const CollectiveOperators ops = build_basis(n).ops;
    const auto comm = [](const ComplexMatrix& a, const ComplexMatrix& b) -> ComplexMatrix {
      return a * b - b * a;
    };
    worst = std::max(worst, (comm(ops.j_x, ops.j_y) - i * ops.j_z).cwiseAbs().maxCoeff());
    worst = std::max(worst, (comm(ops.j_y, ops.j_z) - i * ops.j_x).cwiseAbs().maxCoeff());
    worst = std::max(worst, (comm(ops.j_z, ops.j_x) - i * ops.j_y).cwiseAbs().maxCoeff());
  }
  suite.record("commutators [J_a, J_b] = i eps_abc J_c", worst, 1e-12);
}

void d_matrix_identities(Suite& suite) {
  double worst_oracle = 0.0;
  for (int n = 1; n <= 30; ++n) {
    const CollectiveSpin spin = build_basis(n);
    for (const double theta : {0.1, 0.5, 1.0, pi / 2, 2.0}) {
      const double diff = (wigner_d(n, theta).elements() - rotation_oracle(spin, theta)).cwiseAbs().maxCoeff();
      worst_oracle = std::max(worst_oracle, diff);
    }
  }
  suite.record("d-matrix vs exp(-i theta J_y), N <= 30", worst_oracle, 1e-8);

  double worst_orth = 0.0;
  double worst_transpose = 0.0;
  for (const int n : {10, 25, 50, 75, 100}) {
    for (const double theta : {0.197396, 0.7, 1.107149, pi / 2, 2.9}) {
      const RealMatrix d = wigner_d(n, theta).elements();
      const RealMatrix identity = RealMatrix::Identity(n + 1, n + 1);
      worst_orth = std::max(worst_orth, (d.transpose() * d - identity).cwiseAbs().maxCoeff());
      const RealMatrix back = wigner_d(n, -theta).elements();
      worst_transpose = std::max(worst_transpose, (d - back.transpose()).cwiseAbs().maxCoeff());
    }
  }
  suite.record("d^T d = 1 (completeness), N <= 100", worst_orth, 1e-10);
  suite.record("d(theta)_{l,m} = d(-theta)_{m,l}", worst_transpose, 1e-10);

  double worst_comp = 0.0;
  for (const int n : {7, 40}) {
    const RealMatrix lhs = wigner_d(n, 0.4).elements() * wigner_d(n, 0.9).elements();
    worst_comp = std::max(worst_comp, (lhs - wigner_d(n, 1.3).elements()).cwiseAbs().maxCoeff());
  }
  suite.record("d(a) d(b) = d(a + b)", worst_comp, 1e-9);
}

void model_structure(Suite& suite) {
  double worst_residual = 0.0;
  for (const double a : {0.2, 1.0, 2.0}) {
    ModelParams p = coupling(10, a);
    p.zfs = 3.0;
    for (const int s : {-1, 0, 1}) {
      const RealMatrix h = environment_hamiltonian(p, s);
      const EffectiveEnvironment env = effective_environment(p, s);
      const RealMatrix d = wigner_d(p.n_spins, env.theta_s).elements();
      for (int m = 0; m <= p.n_spins; ++m) {
        const RealVector v = d.col(m);
        worst_residual = std::max(worst_residual, (h * v - env.energy(m) * v).norm());
      }
    }
  }
  suite.record("H0^(s) |theta_s, m> = E_{s,m} |theta_s, m>", worst_residual, 1e-9);

  double worst_angle = 0.0;
  for (const double a : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0}) {
    worst_angle = std::max(worst_angle, std::abs(rotation_angle_difference(coupling(50, a)) - std::atan(a)));
  }
  suite.record("theta_0 - theta_1 = arctan(A / omega_nu)", worst_angle, 1e-14);
}

void franck_condon_properties(Suite& suite) {
  double worst_unitarity = 0.0;
  double worst_closed = 0.0;
  double worst_binomial = 0.0;
  for (const int n : {50, 100, 200}) {
    for (const double a : {0.2, 2.0}) {
      const FcTable fc = fc_table(coupling(n, a));
      const RealVector norms = fc.factors.colwise().squaredNorm();
      worst_unitarity = std::max(worst_unitarity, (norms.array() - 1.0).abs().maxCoeff());
      worst_closed = std::max(worst_closed, (fc.factors.col(0) - fc_ground_column(n, fc.theta)).cwiseAbs().maxCoeff());
      const double p = std::pow(std::sin(0.5 * fc.theta), 2);
      for (int k = 0; k <= n; ++k) {
        const double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                                      k * std::log(p) + (n - k) * std::log1p(-p));
        worst_binomial = std::max(worst_binomial, std::abs(fc(k, 0) * fc(k, 0) - binom));
      }
    }
  }
  suite.record("sum_n f_{m->n}^2 = 1", worst_unitarity, 1e-10);
  suite.record("ground column matches closed form", worst_closed, 1e-10);
  suite.record("|f_{0->n}|^2 is Binomial(N, sin^2(theta/2))", worst_binomial, 1e-10);

  // Poisson limit at fixed lambda = 0.5.
  std::vector<double> deviations;
  for (const int n : {50, 200, 1000}) {
    const double a = std::sqrt(4.0 * 0.5 / n);
    const RealVector column = fc_ground_column(n, std::atan(a));
    double worst = 0.0;
    for (int k = 0; k <= 5; ++k) {
      const double poisson = std::exp(-0.5 + k * std::log(0.5) - std::lgamma(k + 1.0));
      worst = std::max(worst, std::abs(column(k) * column(k) - poisson));
    }
    deviations.push_back(worst);
  }
  suite.record_bool("bosonic limit: Poisson deviation shrinks with N at lambda = 0.5",
                    deviations[0] > deviations[1] && deviations[1] > deviations[2],
                    fmt::format("N = 50, 200, 1000: {:.3e}, {:.3e}, {:.3e}", deviations[0],
                                deviations[1], deviations[2]));

  bool agree = true;
  std::string disagreement;
  for (const int n : {10, 50, 100}) {
    for (const double a : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0}) {
      const FcTable fc = fc_table(coupling(n, a));
      Eigen::Index argmax = 0;
      fc.factors.col(0).cwiseAbs().maxCoeff(&argmax);
      const FavoredLevel fav = favored_level_exact(n, fc.theta);
      const bool ok = argmax == fav.level || (fav.tie && argmax == fav.level - 1);
      if (!ok) {
        agree = false;
        disagreement = fmt::format("N = {}, A = {}: predictor {}, argmax {}", n, a, fav.level, argmax);
      }
    }
  }
  suite.record_bool("most-favoured level equals brute-force argmax", agree,
                    agree ? "18 couplings" : disagreement);

  const auto max_offset = [](const FcTable& fc) {
    int worst = 0;
    for (int m = 0; m < fc.dim(); ++m) {
      Eigen::Index argmax = 0;
      fc.factors.col(m).cwiseAbs().maxCoeff(&argmax);
      worst = std::max(worst, std::abs(static_cast<int>(argmax) - m));
    }
    return worst;
  };
  const int weak = max_offset(fc_table(coupling(50, 0.2)));
  const int strong = max_offset(fc_table(coupling(50, 2.0)));
  suite.record_bool("weak coupling keeps favoured transitions near-diagonal, strong does not",
                    weak <= 4 && strong >= 14,
                    fmt::format("max |n - m| at A = 0.2: {}, at A = 2: {}", weak, strong));
}

void spectrum_properties(Suite& suite) {
  const ModelParams weak = coupling(50, 0.2);
  const std::vector<double> grid = default_detuning_grid(weak);
  const double step = grid[1] - grid[0];
  const SpectrumGrid spectrum = spectrum_zero_t(weak, grid);

  double worst_position = 0.0;
  double worst_height = 0.0;
  for (std::size_t c = 0; c < spectrum.channels().size(); ++c) {
    const SpectrumChannel& ch = spectrum.channels()[c];
    if (ch.resonance < grid.front() || ch.resonance > grid.back()) continue;
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (spectrum.channel_rate(c, i) > spectrum.channel_rate(c, best)) best = i;
    }
    worst_position = std::max(worst_position, std::abs(grid[best] - ch.resonance) / step);
    const double expected = weak.window_time * ch.fc_squared;
    worst_height = std::max(worst_height, std::abs(spectrum.channel_rate_at(c, ch.resonance) - expected));
  }
  suite.record("channel peaks at E_{1,n} - E_{0,m} - D (grid steps)", worst_position, 1.0);
  suite.record("channel peak height (Omega^2/2) t |f|^2", worst_height, 1e-12);

  const SpectrumGrid naked = spectrum_zero_t(coupling(50, 0.0), grid);
  const double sum_rule = std::abs(integrated_intensity(spectrum) / integrated_intensity(naked) - 1.0);
  suite.record("integrated intensity independent of A", sum_rule, 1e-2);

  double worst_symmetry = 0.0;
  for (const double d : {0.1, 0.37, 1.9, 4.2}) {
    worst_symmetry = std::max(worst_symmetry, std::abs(window(d, 10.0) - window(-d, 10.0)));
  }
  suite.record("window function is even", worst_symmetry, 0.0);

  ModelParams warm = coupling(20, 0.5);
  warm.temperature = 8.0;
  const std::vector<double> warm_grid = default_detuning_grid(warm, 801);
  const SpectrumGrid thermal = spectrum_thermal(warm, warm_grid);
  const ThermalWeights weights = thermal_weights(warm.n_spins, warm.temperature);
  double violation = 0.0;
  for (std::size_t i = 0; i < warm_grid.size(); ++i) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int m = 0; m <= warm.n_spins; ++m) {
      double per_m = 0.0;
      for (std::size_t c = 0; c < thermal.channels().size(); ++c) {
        if (thermal.channels()[c].m == m) per_m += thermal.channel_rate(c, i);
      }
      if (weights.weights(m) > kNegligibleWeight) {
        lo = std::min(lo, per_m);
        hi = std::max(hi, per_m);
      }
    }
    const double value = thermal.intensity()[i];
    violation = std::max(violation, std::max(lo - value, value - hi));
  }
  suite.record("thermal spectrum lies between per-m spectra", std::max(violation, 0.0), 1e-12);
}

void dynamics_properties(Suite& suite) {
  const ModelParams p = coupling(10, 0.2);
  const std::vector<double> times = linear_grid(0.0, 20.0, 401);
  const TrajectoryState exact = precession_closed_form(p, times);
  const TrajectoryState numeric = precession_numerical(p, times);
  double worst = 0.0;
  double radius_error = 0.0;
  double jx_drift = 0.0;
  const double theta = rotation_angle_difference(p);
  for (std::size_t k = 0; k < times.size(); ++k) {
    worst = std::max({worst, std::abs(exact.jx_rot[k] - numeric.jx_rot[k]),
                      std::abs(exact.jy_rot[k] - numeric.jy_rot[k]),
                      std::abs(exact.jz_rot[k] - numeric.jz_rot[k])});
    radius_error = std::max(radius_error, std::abs(std::hypot(numeric.jy_rot[k], numeric.jz_rot[k]) -
                                                   0.5 * p.n_spins * std::sin(theta)));
    jx_drift = std::max(jx_drift, std::abs(numeric.jx_rot[k] - numeric.jx_rot[0]));
  }
  suite.record("precession: closed form vs exact propagation", worst, 1e-8);
  suite.record("precession radius (N/2) sin(theta)", radius_error, 1e-8);
  suite.record("<J'_x> conserved", jx_drift, 1e-9);

  const double omega_tilde = effective_environment(p, 1).omega_tilde;
  const double period = measure_precession_period(p, 40.0, 801);
  suite.record("precession period 2 pi / omega_tilde", std::abs(period - 2 * pi / omega_tilde), 1e-6);

  double worst_vertical = 0.0;
  for (const double a : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0}) {
    const ModelParams q = coupling(50, a);
    const double th = rotation_angle_difference(q);
    const int n_mf = favored_level_exact(q).level;
    worst_vertical = std::max(worst_vertical, std::abs((n_mf - 25.0) + 25.0 * std::cos(th)));
  }
  suite.record("vertical transition: |<J'_x>_mf - <J'_x>(0)|", worst_vertical, 1.0);

  ModelParams drive = coupling(4, 0.5);
  drive.rabi = 0.05;
  const double resonance = resonance_detuning(drive, 0, 0);
  const std::vector<double> drive_times = linear_grid(0.0, 2.0, 21);
  const PropagationResult prop = drive_propagation(drive, resonance, drive_times, 0);
  const FcTable fc = fc_table(drive);
  double worst_relative = 0.0;
  for (std::size_t k = 1; k < drive_times.size(); ++k) {
    const double predicted = transition_probability(drive, fc, 0, 0, resonance, drive_times[k]);
    worst_relative = std::max(worst_relative, std::abs(prop.population(k, 1, 0) / predicted - 1.0));
  }
  suite.record("first-order probability vs exact propagation (relative)", worst_relative, 0.05);
  suite.record("propagation norm drift", prop.max_norm_drift, 1e-10);
}

}  // namespace

std::vector<PropertyResult> run_invariant_suite() {
  Suite suite;
  operator_algebra(suite);
  d_matrix_identities(suite);
  model_structure(suite);
  franck_condon_properties(suite);
  spectrum_properties(suite);
  dynamics_properties(suite);
  return suite.take();
}

}  // namespace spinfc
