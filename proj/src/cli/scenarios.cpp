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

#include "spinfc/cli/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <vector>

#include "spinfc/cli/csv.hpp"
#include "spinfc/dynamics.hpp"
#include "spinfc/errors.hpp"
#include "spinfc/franck_condon.hpp"
#include "spinfc/spectroscopy.hpp"
#include "spinfc/validation.hpp"

namespace spinfc::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::vector<double> couplings(const ScenarioConfig& config) {
  if (config.sweep.hyperfine_values.empty()) return {config.params.hyperfine};
  return config.sweep.hyperfine_values;
}

std::vector<int> spin_counts(const ScenarioConfig& config) {
  if (config.sweep.n_spins_values.empty()) return {config.params.n_spins};
  return config.sweep.n_spins_values;
}

ModelParams with(const ModelParams& base, int n_spins, double hyperfine) {
  ModelParams p = base;
  p.n_spins = n_spins;
  p.hyperfine = hyperfine;
  return p;
}

std::string coupling_tag(double hyperfine) { return fmt::format("A{:g}", hyperfine); }

void write_json(const fs::path& path, const json& document) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << document.dump(2) << '\n';
}

int run_fc_factors(const ScenarioConfig& config, std::ostream& log) {
  for (const double a : couplings(config)) {
    const FcTable fc = fc_table(with(config.params, config.params.n_spins, a));
    const fs::path path = config.output_dir / fmt::format("fc_factors_{}.csv", coupling_tag(a));
    CsvWriter csv(path, {"n", "m", "f"});
    for (int m = 0; m < fc.dim(); ++m) {
      for (int n = 0; n < fc.dim(); ++n) csv.row({static_cast<long long>(n), static_cast<long long>(m), fc(n, m)});
    }
    log << fmt::format("wrote {} (N = {}, A = {:g}, theta = {:.6f})\n", path.string(), fc.n_spins, a, fc.theta);
  }
  return kExitOk;
}

int run_fc_sweep(const ScenarioConfig& config, std::ostream& log) {
  const int n_spins = config.params.n_spins;
  const int max_level = std::min(config.sweep.max_level, n_spins);
  const std::vector<double> grid = linear_grid(0.0, config.sweep.hyperfine_max, config.sweep.hyperfine_points);
  const fs::path path = config.output_dir / "fc_sweep.csv";
  CsvWriter csv(path, {"hyperfine_over_omega_nu", "n", "abs_f"});
  for (const double a : grid) {
    const RealVector column = fc_ground_column(n_spins, std::atan2(a, config.params.omega_nu));
    for (int n = 0; n <= max_level; ++n) csv.row({a, static_cast<long long>(n), std::abs(column(n))});
  }
  log << fmt::format("wrote {} (N = {}, n <= {}, {} couplings)\n", path.string(), n_spins, max_level, grid.size());
  return kExitOk;
}

int run_favored(const ScenarioConfig& config, std::ostream& log) {
  const fs::path path = config.output_dir / "favored.csv";
  CsvWriter csv(path, {"n_spins", "hyperfine_over_omega_nu", "theta", "predictor", "n_mf_exact", "tie_exact",
                       "lambda", "n_mf_hp", "tie_hp", "argmax_fc", "agree"});
  bool all_agree = true;
  log << fmt::format("{:>6} {:>8} {:>10} {:>8} {:>8} {:>8}\n", "N", "A", "predictor", "n_mf", "n_mf_hp", "argmax");
  for (const int n : spin_counts(config)) {
    for (const double a : couplings(config)) {
      const ModelParams p = with(config.params, n, a);
      validate(p);
      const FcTable fc = fc_table(p);
      Eigen::Index argmax = 0;
      fc.factors.col(0).cwiseAbs().maxCoeff(&argmax);
      const FavoredLevel exact = favored_level_exact(p);
      const HpFcParams hp = hp_params(p);
      const FavoredLevel boson = favored_level_hp(hp);
      const bool agree = argmax == exact.level || (exact.tie && argmax == exact.level - 1);
      all_agree = all_agree && agree;
      csv.row({static_cast<long long>(n), a, fc.theta, exact.predictor, static_cast<long long>(exact.level),
               static_cast<long long>(exact.tie), hp.lambda, static_cast<long long>(boson.level),
               static_cast<long long>(boson.tie), static_cast<long long>(argmax), static_cast<long long>(agree)});
      log << fmt::format("{:>6} {:>8g} {:>10.4f} {:>8} {:>8} {:>8}{}\n", n, a, exact.predictor, exact.level,
                         boson.level, argmax, agree ? "" : "  MISMATCH");
    }
  }
  log << fmt::format("wrote {}\n", path.string());
  return all_agree ? kExitOk : kExitValidationFailure;
}

std::vector<double> spectrum_grid(const ScenarioConfig& config, const std::vector<double>& values) {
  const GridControls& g = config.grid;
  if (g.detuning_min) return linear_grid(*g.detuning_min, *g.detuning_max, g.detuning_points);
  const double widest = *std::max_element(values.begin(), values.end());
  return default_detuning_grid(with(config.params, config.params.n_spins, widest), g.detuning_points);
}

void write_spectrum_csv(const fs::path& path, const SpectrumGrid& spectrum, bool channel_rows) {
  CsvWriter csv(path, {"delta_over_omega_nu", "intensity", "channel_m", "channel_n", "channel_rate"});
  const auto& grid = spectrum.detunings();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!channel_rows) {
      csv.row({grid[i], spectrum.intensity()[i], -1LL, -1LL, spectrum.intensity()[i]});
      continue;
    }
    for (std::size_t c = 0; c < spectrum.channels().size(); ++c) {
      const SpectrumChannel& ch = spectrum.channels()[c];
      csv.row({grid[i], spectrum.intensity()[i], static_cast<long long>(ch.m), static_cast<long long>(ch.n),
               ch.weight * spectrum.channel_rate(c, i)});
    }
  }
}

json summarize(const ModelParams& p, const SpectrumGrid& spectrum, bool list_channels) {
  const Peak peak = global_peak(spectrum);
  json summary = {
      {"hyperfine", p.hyperfine},
      {"n_spins", p.n_spins},
      {"window_time", p.window_time},
      {"theta", rotation_angle_difference(p)},
      {"omega_tilde", effective_environment(p, 1).omega_tilde},
      {"grid",
       {{"min", spectrum.detunings().front()},
        {"max", spectrum.detunings().back()},
        {"points", spectrum.detunings().size()}}},
      {"global_peak", {{"detuning", peak.detuning}, {"height", peak.height}}},
      {"integrated_intensity", integrated_intensity(spectrum)},
      {"channel_count", spectrum.channels().size()},
      {"warnings", spectrum.warnings()},
  };
  json maxima = json::array();
  for (const Peak& local : local_maxima(spectrum, 0.01)) {
    maxima.push_back({{"detuning", local.detuning}, {"height", local.height}});
  }
  summary["local_maxima"] = maxima;
  if (list_channels) {
    json channels = json::array();
    for (const SpectrumChannel& ch : spectrum.channels()) {
      channels.push_back({{"m", ch.m},
                          {"n", ch.n},
                          {"fc_squared", ch.fc_squared},
                          {"resonance", ch.resonance},
                          {"peak_height", ch.weight * p.window_time * ch.fc_squared}});
    }
    summary["channels"] = channels;
  }
  return summary;
}

int run_spectrum(const ScenarioConfig& config, std::ostream& log, bool thermal) {
  const std::vector<double> values = couplings(config);
  const std::vector<double> grid = spectrum_grid(config, values);
  const bool channel_rows = config.channel_rows.value_or(!thermal);
  const std::string stem = thermal ? "thermal_spectrum" : "spectrum";

  std::vector<SpectrumGrid> spectra;
  json entries = json::array();
  for (const double a : values) {
    const ModelParams p = with(config.params, config.params.n_spins, a);
    SpectrumGrid spectrum = thermal ? spectrum_thermal(p, grid) : spectrum_zero_t(p, grid);
    const fs::path path = config.output_dir / fmt::format("{}_{}.csv", stem, coupling_tag(a));
    write_spectrum_csv(path, spectrum, channel_rows);
    for (const auto& warning : spectrum.warnings()) log << "warning: " << warning << '\n';
    const Peak peak = global_peak(spectrum);
    log << fmt::format("wrote {} (A = {:g}: peak {:.6g} at Delta = {:.6g})\n", path.string(), a, peak.height,
                       peak.detuning);
    entries.push_back(summarize(p, spectrum, !thermal));
    spectra.push_back(std::move(spectrum));
  }

  json blockade = json::array();
  for (std::size_t i = 1; i < spectra.size(); ++i) {
    const BlockadeMetric metric = blockade_metric(spectra[i], spectra[0]);
    blockade.push_back({{"hyperfine", values[i]},
                        {"reference_hyperfine", values[0]},
                        {"peak_ratio", metric.peak_ratio},
                        {"integrated_ratio", metric.integrated_ratio}});
  }

  json document = {{"scenario", thermal ? "thermal-spectrum" : "spectrum"},
                   {"units", kUnitsLine},
                   {"spectra", entries},
                   {"blockade", blockade}};
  if (thermal) {
    const ThermalWeights w = thermal_weights(config.params.n_spins, config.params.temperature);
    const double spread = w.weights.maxCoeff() / w.weights.minCoeff() - 1.0;
    double step = 0.0;
    for (Eigen::Index m = 1; m < w.weights.size(); ++m) {
      step = std::max(step, std::abs(1.0 - w.weights(m) / w.weights(m - 1)));
    }
    document["thermal"] = {{"temperature_ratio", config.params.temperature},
                           {"weight_spread", spread},
                           {"adjacent_weight_step", step}};
  }
  const fs::path summary = config.output_dir / fmt::format("{}_summary.json", stem);
  write_json(summary, document);
  log << fmt::format("wrote {}\n", summary.string());
  return kExitOk;
}

int run_hp_compare(const ScenarioConfig& config, std::ostream& log) {
  const ModelParams& p = config.params;
  const FcTable fc = fc_table(p);
  const HpFcParams hp = hp_params(p);
  const int max_level = std::min(config.sweep.max_level, p.n_spins);

  const fs::path table_path = config.output_dir / "hp_compare.csv";
  CsvWriter table(table_path, {"m", "n", "f_exact", "f_hp", "abs_f_difference"});
  for (int m = 0; m <= max_level; ++m) {
    for (int n = 0; n <= max_level; ++n) {
      const double exact = fc(n, m);
      const double boson = hp_fc_factor(hp, m, n);
      table.row({static_cast<long long>(m), static_cast<long long>(n), exact, boson,
                 std::abs(std::abs(exact) - std::abs(boson))});
    }
  }

  // Convergence toward the Poisson law at the configured lambda.
  std::vector<int> sizes = config.sweep.n_spins_values;
  if (sizes.empty()) sizes = {50, 200, 1000};
  const fs::path conv_path = config.output_dir / "hp_convergence.csv";
  CsvWriter conv(conv_path, {"n_spins", "hyperfine_over_omega_nu", "lambda", "max_poisson_deviation"});
  for (const int n : sizes) {
    const double a = 2.0 * p.omega_nu * std::sqrt(hp.lambda / n);
    const RealVector column = fc_ground_column(n, std::atan2(a, p.omega_nu));
    double worst = 0.0;
    for (int k = 0; k <= std::min(5, n); ++k) {
      const double poisson = std::pow(hp_fc_factor(hp, 0, k), 2);
      worst = std::max(worst, std::abs(column(k) * column(k) - poisson));
    }
    conv.row({static_cast<long long>(n), a, hp.lambda, worst});
    log << fmt::format("N = {:>5}: max_n<=5 | |f|^2 - Poisson | = {:.4e}\n", n, worst);
  }
  log << fmt::format("wrote {} and {}\n", table_path.string(), conv_path.string());
  return kExitOk;
}

void write_trajectory(const fs::path& path, const TrajectoryState& state) {
  CsvWriter csv(path, {"t", "jx_rot", "jy_rot", "jz_rot"});
  for (std::size_t k = 0; k < state.times.size(); ++k) {
    csv.row({state.times[k], state.jx_rot[k], state.jy_rot[k], state.jz_rot[k]});
  }
}

int run_dynamics(const ScenarioConfig& config, std::ostream& log) {
  const ModelParams& p = config.params;
  const std::vector<double> times = linear_grid(0.0, config.grid.time_max, config.grid.time_points);
  const TrajectoryState numeric = precession_numerical(p, times);
  const TrajectoryState exact = precession_closed_form(p, times);
  write_trajectory(config.output_dir / "trajectory.csv", numeric);
  write_trajectory(config.output_dir / "trajectory_closed_form.csv", exact);

  double deviation = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    deviation = std::max({deviation, std::abs(numeric.jx_rot[k] - exact.jx_rot[k]),
                          std::abs(numeric.jy_rot[k] - exact.jy_rot[k]), std::abs(numeric.jz_rot[k] - exact.jz_rot[k])});
  }
  const double omega_tilde = effective_environment(p, 1).omega_tilde;
  const double expected_period = 2.0 * std::numbers::pi / omega_tilde;
  json summary = {{"n_spins", p.n_spins},
                  {"hyperfine", p.hyperfine},
                  {"theta", rotation_angle_difference(p)},
                  {"omega_tilde", omega_tilde},
                  {"radius", 0.5 * p.n_spins * std::sin(rotation_angle_difference(p))},
                  {"jx_rot", -0.5 * p.n_spins * std::cos(rotation_angle_difference(p))},
                  {"expected_period", expected_period},
                  {"max_closed_form_deviation", deviation}};
  if (config.grid.time_max > 1.5 * expected_period) {
    summary["measured_period"] = measure_precession_period(p, config.grid.time_max, config.grid.time_points);
  }
  write_json(config.output_dir / "dynamics_summary.json", summary);
  log << fmt::format("wrote trajectory.csv, trajectory_closed_form.csv, dynamics_summary.json; "
                     "max |closed form - exact| = {:.3e}\n",
                     deviation);
  return deviation <= 1e-8 ? kExitOk : kExitValidationFailure;
}

int run_validate(std::ostream& log) {
  bool all = true;
  for (const PropertyResult& r : run_invariant_suite()) {
    log << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  log << (all ? "all properties pass\n" : "some properties FAILED\n");
  return all ? kExitOk : kExitValidationFailure;
}

}  // namespace

int run(const ScenarioConfig& config, std::ostream& log) {
  if (config.scenario != Scenario::kValidate) fs::create_directories(config.output_dir);
  switch (config.scenario) {
    case Scenario::kFcFactors:
      return run_fc_factors(config, log);
    case Scenario::kFcSweep:
      return run_fc_sweep(config, log);
    case Scenario::kFavored:
      return run_favored(config, log);
    case Scenario::kSpectrum:
      return run_spectrum(config, log, false);
    case Scenario::kThermalSpectrum:
      return run_spectrum(config, log, true);
    case Scenario::kHpCompare:
      return run_hp_compare(config, log);
    case Scenario::kDynamics:
      return run_dynamics(config, log);
    case Scenario::kValidate:
      return run_validate(log);
  }
  return kExitConfigError;
}

}  // namespace spinfc::cli
