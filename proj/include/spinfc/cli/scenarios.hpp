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

#include <ostream>

#include "spinfc/cli/config.hpp"

namespace spinfc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitDomainError = 3,
  kExitValidationFailure = 4,
};

/// Runs one scenario, writing its files under config.output_dir and a short
/// report to `log`. Returns kExitOk or kExitValidationFailure; configuration
/// and domain problems propagate as ConfigError / DomainError.
int run(const ScenarioConfig& config, std::ostream& log);

}  // namespace spinfc::cli
