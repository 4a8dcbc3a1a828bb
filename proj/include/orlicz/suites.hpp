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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/sampling.hpp"
#include "orlicz/topology_lab.hpp"

namespace orlicz {

struct SuiteParams {
  std::string phi = "power:p=2";
  std::uint64_t seed = 0;
  int samples = 100;
  std::optional<double> eps;  // suite default when absent
  std::optional<double> L;    // modular bound for the continuity suite
  double tol = kDefaultNormTol;
  double check_tol = 1e-9;
};

/// Fails with Errc::parse on unknown keys or wrongly typed values.
SuiteParams parse_suite_params(const Json& j);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a seeded property suite over random elements. Sample i uses
/// derive_seed(seed, i, .) only, so reports are identical for a given seed.
///
///   young            scalar Young grid and the trace form tau|xy| <= rho_phi(x) + rho_psi(y)
///   sandwich         ||x|| <= ||x||° <= 2 ||x||
///   fatou            increasing positive chains
///   truncation       spectral truncation tails and reconstruction
///   continuity       modular continuity delta estimate
///   monotonicity     uniform monotonicity delta estimate
///   norm-measure     perturbation sequences x + 2^-n y
///   superadditivity  rho(x + y) >= rho(x) + rho(y) on positive pairs
///   submajorization  mu_t(x + y) <= mu_{t/2}(x) + mu_{t/2}(y)
///   axioms           norm axioms, unitary invariance, profile vs functional calculus
///   delta2-lemmas    modular floor and norm gaps around the unit sphere
ExperimentReport run_suite(const std::string& name, const SuiteParams& params);

/// Element with operator norm rescaled to `target` (zero stays zero).
MatrixElement with_operator_norm(const MatrixElement& x, double target);

}  // namespace orlicz
