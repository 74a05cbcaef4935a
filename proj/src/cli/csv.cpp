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

#include "spinfc/cli/csv.hpp"

#include <fmt/format.h>
#include <stdexcept>

#include "spinfc/errors.hpp"

namespace spinfc::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  return fmt::format("{:.12g}", value);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()), path_(path.string()) {
  if (!out_) throw std::runtime_error("cannot open '" + path_ + "' for writing");
  out_ << kUnitsLine << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<CsvField> fields) { row(std::vector<CsvField>(fields)); }

void CsvWriter::row(const std::vector<CsvField>& fields) {
  if (fields.size() != columns_) throw std::logic_error("CSV row width mismatch in " + path_);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out_ << format_number(v);
          } else {
            out_ << v;
          }
        },
        fields[i]);
  }
  out_ << '\n';
}

}  // namespace spinfc::cli
