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

#include "spinfc/special_functions.hpp"

#include <cmath>
#include <vector>

#include "spinfc/errors.hpp"

namespace spinfc {

namespace {

constexpr int kTableSize = 4096;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kTableSize);
    for (int k = 0; k < kTableSize; ++k) t[k] = std::lgamma(k + 1.0);
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int k) {
  if (k < 0) throw DomainError("log_factorial of a negative integer");
  if (k < kTableSize) return log_factorial_table()[k];
  return std::lgamma(k + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("binomial index out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double laguerre(int n, int alpha, double x) {
  if (n < 0 || alpha < 0) throw DomainError("Laguerre degree and order must be non-negative");
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * current - (k + alpha) * previous) / (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace spinfc
