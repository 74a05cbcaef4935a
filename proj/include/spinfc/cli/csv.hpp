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
#include <fstream>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace spinfc::cli {

/// Units statement written as the first (comment) line of every CSV.
inline constexpr const char* kUnitsLine =
    "# units: frequencies and detunings in omega_nu; rates in Omega^2/(2 omega_nu); times in 1/omega_nu";

/// Decimal, 12 significant digits, '.' radix; -0 is written as 0.
std::string format_number(double value);

using CsvField = std::variant<double, long long, std::string>;

/// Writes "# units" + mandatory header row + '\n'-terminated rows.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);

  void row(std::initializer_list<CsvField> fields);
  void row(const std::vector<CsvField>& fields);

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::string path_;
};

}  // namespace spinfc::cli
