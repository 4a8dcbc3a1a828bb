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

#include "orlicz/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/error.hpp"

namespace orlicz {

SpectralProfile CounterexampleFamily::tail_profile() const {
  std::vector<Step> steps;
  for (int k = atoms(); k > tail_index; --k) steps.push_back({alphas[k - 1], weights[k - 1]});
  return SpectralProfile(std::move(steps));
}

double CounterexampleFamily::infinite_modular() const { return epsilon * std::ldexp(1.0, -tail_index); }

double CounterexampleFamily::materialized_modular_expected() const {
  return epsilon * (std::ldexp(1.0, -tail_index) - std::ldexp(1.0, -atoms()));
}

long long DivergenceCertificate::terms_to_exceed(double bound, double eps) const {
  if (!(eps > 0.0)) return -1;
  return static_cast<long long>(std::ceil(bound / eps));
}

DivergenceCertificate divergence_certificate(const CounterexampleFamily& family, double scale) {
  if (!(scale > 1.0) || !std::isfinite(scale)) fail(Errc::domain, "divergence_certificate: scale must be > 1");
  DivergenceCertificate cert;
  cert.scale = scale;
  // Smallest n0 > n with scale >= 1 + 1/n0; the slack absorbs rounding of 1/n.
  const double needed = std::ceil(1.0 / (scale - 1.0) - 1e-9);
  cert.first_index = std::max(family.tail_index + 1, static_cast<int>(std::min(needed, 1e9)));
  cert.min_term = std::numeric_limits<double>::infinity();
  for (int k = cert.first_index; k <= family.atoms(); ++k) {
    const double term = family.phi(scale * family.alphas[k - 1]) * family.weights[k - 1];
    cert.terms.push_back(term);
    cert.min_term = std::min(cert.min_term, term);
  }
  cert.every_term_exceeds_epsilon = !cert.terms.empty() && cert.min_term > family.epsilon;
  return cert;
}

}  // namespace orlicz
