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

#include <string>
#include <vector>

namespace spinfc {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every structural property of the library (operator algebra, d-matrix
/// identities, Franck-Condon sum rules, spectrum geometry, dynamics) at the
/// documented tolerances. Deterministic.
std::vector<PropertyResult> run_invariant_suite();

}  // namespace spinfc
