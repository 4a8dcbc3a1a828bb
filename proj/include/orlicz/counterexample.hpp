// Copyright (c) 2026 The orlicz Authors. All Rights Reserved.
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

#include <vector>

#include "orlicz/orlicz_function.hpp"
#include "orlicz/svf.hpp"

namespace orlicz {

/// Atomic family x_n = sum_{k > n} alpha_k e_k over orthogonal projections
/// with tau(e_k) = epsilon / (2^k phi(alpha_k)), where the alpha_k satisfy
/// phi((1 + 1/k) alpha_k) > 2^k phi(alpha_k). Only atoms k = 1..K are
/// materialized; the infinite tail is certified term by term.
struct CounterexampleFamily {
  OrliczFunction phi;
  double epsilon = 1.0;
  std::vector<double> alphas;   // alpha_1 .. alpha_K, strictly increasing
  std::vector<double> weights;  // tau(e_1) .. tau(e_K)
  int tail_index = 1;           // n

  int atoms() const noexcept { return static_cast<int>(alphas.size()); }
  /// Materialized x_n: steps (alpha_k, weight_k) for k = n+1..K, decreasing.
  SpectralProfile tail_profile() const;
  /// Modular of the infinite x_n: epsilon / 2^n.
  double infinite_modular() const;
  /// Modular of the materialized x_n: epsilon (2^-n - 2^-K).
  double materialized_modular_expected() const;
};

/// Per-term lower bounds showing tau(phi(l x_n)) = infinity for a scale l > 1.
struct DivergenceCertificate {
  double scale = 0.0;            // l
  int first_index = 0;           // n0 >= n + 1 with l >= 1 + 1/n0
  std::vector<double> terms;     // phi(l alpha_k) tau(e_k), k = first_index..K
  double min_term = 0.0;
  bool every_term_exceeds_epsilon = false;
  /// Terms needed so the partial sum exceeds `bound`: ceil(bound / epsilon).
  long long terms_to_exceed(double bound, double epsilon) const;
};

/// Fails with Errc::domain when l <= 1.
DivergenceCertificate divergence_certificate(const CounterexampleFamily& family, double scale);

}  // namespace orlicz
