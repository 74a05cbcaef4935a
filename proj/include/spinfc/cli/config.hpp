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

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinfc/model.hpp"

namespace spinfc::cli {

/// Malformed or unknown configuration input (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Scenario {
  kFcFactors,
  kFcSweep,
  kFavored,
  kSpectrum,
  kThermalSpectrum,
  kHpCompare,
  kDynamics,
  kValidate,
};

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario scenario);
const std::vector<std::string_view>& scenario_names();

struct GridControls {
  std::optional<double> detuning_min;
  std::optional<double> detuning_max;
  int detuning_points = 4001;
  double time_max = 20.0;
  int time_points = 401;
};

struct SweepControls {
  /// Couplings for multi-coupling scenarios; empty means the model coupling.
  std::vector<double> hyperfine_values;
  /// Environment sizes for favored / hp-compare; empty means the model size.
  std::vector<int> n_spins_values;
  double hyperfine_max = 5.0;
  int hyperfine_points = 201;
  int max_level = 10;
};

struct ScenarioConfig {
  std::string preset = "nv-default";
  ModelParams params;
  Scenario scenario = Scenario::kValidate;
  std::filesystem::path output_dir = "out";
  GridControls grid;
  SweepControls sweep;
  /// Emit one CSV row per (grid point, channel); otherwise one total row per point.
  std::optional<bool> channel_rows;
};

/// Flat "section.key" -> raw value layer. Later layers override earlier ones.
using RawSettings = std::map<std::string, std::string>;

/// Reads a sectioned key = value file. Throws ConfigError on syntax errors,
/// keys outside a section, or unknown sections/keys.
RawSettings read_config_file(const std::filesystem::path& path);
RawSettings parse_config_text(const std::string& text);

/// Environment overrides: SPINFC_<NAME> for each name in env_override_names().
/// `lookup` returns the variable's value or nullopt.
RawSettings read_environment(const std::function<std::optional<std::string>(const std::string&)>& lookup);

/// Pairs of (environment variable, settings key).
const std::vector<std::pair<std::string, std::string>>& env_override_names();

/// Builds a validated configuration. The preset is applied first, then every
/// other model key; temperature_k is converted with omega_nu_hz. Throws
/// ConfigError for unknown keys or unparsable values and DomainError for
/// out-of-range physics.
ScenarioConfig build_config(const RawSettings& settings);

/// Merges `overrides` into `base` (override wins).
void merge_settings(RawSettings& base, const RawSettings& overrides);

}  // namespace spinfc::cli
