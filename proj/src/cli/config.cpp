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

#include "spinfc/cli/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "spinfc/errors.hpp"

namespace spinfc::cli {

namespace {

constexpr std::pair<Scenario, std::string_view> kScenarioTable[] = {
    {Scenario::kFcFactors, "fc-factors"},       {Scenario::kFcSweep, "fc-sweep"},
    {Scenario::kFavored, "favored"},            {Scenario::kSpectrum, "spectrum"},
    {Scenario::kThermalSpectrum, "thermal-spectrum"}, {Scenario::kHpCompare, "hp-compare"},
    {Scenario::kDynamics, "dynamics"},          {Scenario::kValidate, "validate"},
};

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model.preset",          "model.n_spins",         "model.hyperfine",
      "model.omega_el",        "model.zfs",             "model.rabi",
      "model.window_time",     "model.temperature",     "model.temperature_k",
      "model.omega_nu_hz",     "scenario.name",         "grid.detuning_min",
      "grid.detuning_max",     "grid.detuning_points",  "grid.time_max",
      "grid.time_points",      "sweep.hyperfine_values", "sweep.n_spins_values",
      "sweep.hyperfine_max",   "sweep.hyperfine_points", "sweep.max_level",
      "output.dir",            "output.channel_rows",
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("'" + key + "': expected a number, got '" + raw + "'");
  }
  return value;
}

int parse_int(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("'" + key + "': expected an integer, got '" + raw + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("'" + key + "': expected true/false, got '" + raw + "'");
}

std::vector<std::string> split_list(const std::string& raw) {
  std::vector<std::string> items;
  std::stringstream stream(raw);
  std::string item;
  while (std::getline(stream, item, ',')) items.push_back(trim(item));
  return items;
}

void check_known(const std::string& key) {
  if (!known_keys().contains(key)) throw ConfigError("unknown configuration key '" + key + "'");
}

RawSettings flatten(const boost::property_tree::ptree& tree) {
  RawSettings out;
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      if (!body.data().empty()) throw ConfigError("key '" + section + "' must appear inside a [section]");
      continue;
    }
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      check_known(full);
      out[full] = value.get_value<std::string>();
    }
  }
  return out;
}

ModelParams preset_params(const std::string& name) {
  if (name == "nv-default") return nv_preset();
  if (name == "none") return ModelParams{};
  throw ConfigError("unknown preset '" + name + "' (expected nv-default or none)");
}

}  // namespace

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (const auto& [scenario, label] : kScenarioTable) {
    if (label == name) return scenario;
  }
  return std::nullopt;
}

std::string_view scenario_name(Scenario scenario) {
  for (const auto& [s, label] : kScenarioTable) {
    if (s == scenario) return label;
  }
  return "unknown";
}

const std::vector<std::string_view>& scenario_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& entry : kScenarioTable) out.push_back(entry.second);
    return out;
  }();
  return names;
}

RawSettings parse_config_text(const std::string& text) {
  std::istringstream stream(text);
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(stream, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  return flatten(tree);
}

RawSettings read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config_text(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

const std::vector<std::pair<std::string, std::string>>& env_override_names() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"SPINFC_PRESET", "model.preset"},
      {"SPINFC_N_SPINS", "model.n_spins"},
      {"SPINFC_HYPERFINE", "model.hyperfine"},
      {"SPINFC_WINDOW_TIME", "model.window_time"},
      {"SPINFC_TEMPERATURE_K", "model.temperature_k"},
      {"SPINFC_SCENARIO", "scenario.name"},
      {"SPINFC_OUT", "output.dir"},
  };
  return names;
}

RawSettings read_environment(
    const std::function<std::optional<std::string>(const std::string&)>& lookup) {
  RawSettings out;
  for (const auto& [variable, key] : env_override_names()) {
    if (auto value = lookup(variable)) out[key] = *value;
  }
  return out;
}

void merge_settings(RawSettings& base, const RawSettings& overrides) {
  for (const auto& [key, value] : overrides) base[key] = value;
}

ScenarioConfig build_config(const RawSettings& settings) {
  for (const auto& entry : settings) check_known(entry.first);
  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };

  ScenarioConfig config;
  if (const auto* v = get("model.preset")) config.preset = trim(*v);
  config.params = preset_params(config.preset);
  ModelParams& p = config.params;

  if (const auto* v = get("model.n_spins")) p.n_spins = parse_int("model.n_spins", *v);
  if (const auto* v = get("model.hyperfine")) p.hyperfine = parse_double("model.hyperfine", *v);
  if (const auto* v = get("model.omega_el")) p.omega_el = parse_double("model.omega_el", *v);
  if (const auto* v = get("model.zfs")) p.zfs = parse_double("model.zfs", *v);
  if (const auto* v = get("model.rabi")) p.rabi = parse_double("model.rabi", *v);
  if (const auto* v = get("model.window_time")) p.window_time = parse_double("model.window_time", *v);
  if (const auto* v = get("model.omega_nu_hz")) p.omega_nu_hz = parse_double("model.omega_nu_hz", *v);
  const auto* ratio = get("model.temperature");
  const auto* kelvin = get("model.temperature_k");
  if (ratio && kelvin) throw ConfigError("set either model.temperature or model.temperature_k, not both");
  if (ratio) p.temperature = parse_double("model.temperature", *ratio);
  if (kelvin) {
    p.temperature = temperature_ratio_from_kelvin(parse_double("model.temperature_k", *kelvin), p.omega_nu_hz);
  }

  if (const auto* v = get("scenario.name")) {
    const auto scenario = parse_scenario(trim(*v));
    if (!scenario) throw ConfigError("unknown scenario '" + *v + "'");
    config.scenario = *scenario;
  }

  GridControls& g = config.grid;
  if (const auto* v = get("grid.detuning_min")) g.detuning_min = parse_double("grid.detuning_min", *v);
  if (const auto* v = get("grid.detuning_max")) g.detuning_max = parse_double("grid.detuning_max", *v);
  if (const auto* v = get("grid.detuning_points")) g.detuning_points = parse_int("grid.detuning_points", *v);
  if (const auto* v = get("grid.time_max")) g.time_max = parse_double("grid.time_max", *v);
  if (const auto* v = get("grid.time_points")) g.time_points = parse_int("grid.time_points", *v);
  if (g.detuning_min.has_value() != g.detuning_max.has_value()) {
    throw ConfigError("grid.detuning_min and grid.detuning_max must be given together");
  }

  SweepControls& s = config.sweep;
  if (const auto* v = get("sweep.hyperfine_values")) {
    for (const auto& item : split_list(*v)) s.hyperfine_values.push_back(parse_double("sweep.hyperfine_values", item));
  }
  if (const auto* v = get("sweep.n_spins_values")) {
    for (const auto& item : split_list(*v)) s.n_spins_values.push_back(parse_int("sweep.n_spins_values", item));
  }
  if (const auto* v = get("sweep.hyperfine_max")) s.hyperfine_max = parse_double("sweep.hyperfine_max", *v);
  if (const auto* v = get("sweep.hyperfine_points")) s.hyperfine_points = parse_int("sweep.hyperfine_points", *v);
  if (const auto* v = get("sweep.max_level")) s.max_level = parse_int("sweep.max_level", *v);

  if (const auto* v = get("output.dir")) config.output_dir = trim(*v);
  if (const auto* v = get("output.channel_rows")) config.channel_rows = parse_bool("output.channel_rows", *v);

  // Physical ranges.
  validate(p);
  for (const double a : s.hyperfine_values) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("sweep.hyperfine_values must be non-negative");
  }
  for (const int n : s.n_spins_values) {
    if (n < 1) throw DomainError("sweep.n_spins_values must be positive");
  }
  if (g.detuning_points < 2) throw DomainError("grid.detuning_points must be at least 2");
  if (g.detuning_min && !(*g.detuning_max > *g.detuning_min)) {
    throw DomainError("grid.detuning_max must exceed grid.detuning_min");
  }
  if (!(g.time_max > 0.0) || g.time_points < 2) throw DomainError("time grid needs time_max > 0 and >= 2 points");
  if (!(s.hyperfine_max > 0.0) || s.hyperfine_points < 2) {
    throw DomainError("sweep.hyperfine_max must be positive with >= 2 points");
  }
  if (s.max_level < 0) throw DomainError("sweep.max_level must be non-negative");
  return config;
}

}  // namespace spinfc::cli
