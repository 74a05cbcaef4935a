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

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <iostream>
#include <optional>
#include <string>

#include "spinfc/cli/config.hpp"
#include "spinfc/cli/scenarios.hpp"
#include "spinfc/errors.hpp"

using namespace spinfc::cli;

int main(int argc, char** argv) {
  CLI::App app{"Collective-spin Franck-Condon simulator"};

  std::string scenario_arg;
  std::string config_path;
  std::optional<std::string> scenario_flag, out_dir, preset;
  std::optional<int> n_spins;
  std::optional<double> hyperfine, window_time, temperature_k;

  std::string scenario_help = "scenario:";
  for (const auto name : scenario_names()) scenario_help += " " + std::string(name);
  app.add_option("command", scenario_arg, scenario_help);
  app.add_option("--scenario", scenario_flag, "scenario (alternative to the positional form)");
  app.add_option("--config", config_path, "sectioned key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--preset", preset, "parameter preset: nv-default or none");
  app.add_option("--n-spins", n_spins, "number of environment spins N");
  app.add_option("--hyperfine", hyperfine, "hyperfine coupling A in units of omega_nu");
  app.add_option("--window-time", window_time, "omega_nu t used for finite-time rates");
  app.add_option("--temperature-k", temperature_k, "environment temperature in kelvin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    RawSettings settings;
    if (!config_path.empty()) settings = read_config_file(config_path);
    merge_settings(settings, read_environment([](const std::string& name) -> std::optional<std::string> {
      if (const char* value = std::getenv(name.c_str())) return std::string(value);
      return std::nullopt;
    }));

    RawSettings flags;
    if (!scenario_arg.empty() && scenario_flag && *scenario_flag != scenario_arg) {
      throw ConfigError("positional scenario and --scenario disagree");
    }
    if (!scenario_arg.empty()) flags["scenario.name"] = scenario_arg;
    if (scenario_flag) flags["scenario.name"] = *scenario_flag;
    if (out_dir) flags["output.dir"] = *out_dir;
    if (preset) flags["model.preset"] = *preset;
    if (n_spins) flags["model.n_spins"] = std::to_string(*n_spins);
    if (hyperfine) flags["model.hyperfine"] = fmt::format("{}", *hyperfine);
    if (window_time) flags["model.window_time"] = fmt::format("{}", *window_time);
    if (temperature_k) {
      settings.erase("model.temperature");
      flags["model.temperature_k"] = fmt::format("{}", *temperature_k);
    }
    merge_settings(settings, flags);
    if (!settings.contains("scenario.name")) throw ConfigError("no scenario given");

    const ScenarioConfig config = build_config(settings);
    return run(config, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const spinfc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const spinfc::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
