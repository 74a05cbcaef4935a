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

namespace spinfc {

/// log(k!) for k >= 0.
double log_factorial(int k);

/// log C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// Generalized Laguerre polynomial L_n^{alpha}(x) by the three-term
/// recurrence in n at fixed alpha >= 0:
///   (k + 1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
double laguerre(int n, int alpha, double x);

}  // namespace spinfc
