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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "orlicz/counterexample.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operator_model.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/svf.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, violation, hypotheses_fail };

const char* to_string(Verdict v) noexcept;

/// Outcome of one experiment. Witnesses carry enough input data (sample
/// indices, scales, levels) to replay the measurement that produced them.
struct ExperimentReport {
  std::string name;
  Json params = Json::object();
  std::uint64_t seed = 0;
  int samples = 0;
  Verdict verdict = Verdict::pass;
  Json witnesses = Json::array();
  Json estimates = Json::object();

  bool passed() const noexcept { return verdict == Verdict::pass; }
  /// {name, params, seed, samples, verdict, witnesses, estimates}, in that order.
  Json to_json() const;
};

/// Empirical delta estimates below this count as zero.
inline constexpr double kDeltaFloor = 1e-6;

/// x in V(eps, delta), i.e. lambda_eps(x) < delta.
bool in_neighborhood(const MatrixElement& x, double eps, double delta);

/// Finite-sequence stand-in for "q_n -> 0": the last value is <= final_tol and
/// the trailing `tail_fraction` of the sequence is nonincreasing up to
/// monotone_slack.
struct ConvergenceOptions {
  double final_tol = 1e-2;
  double tail_fraction = 0.5;
  double monotone_slack = 1e-9;
};

bool converges_to_zero(std::span<const double> values, const ConvergenceOptions& options);

/// lambda_eps(x_n - x) for each eps; violation when some eps does not converge.
ExperimentReport measure_converges(std::span<const MatrixElement> seq, const MatrixElement& x,
                                   std::span<const double> eps_list, const ConvergenceOptions& options = {});

/// Increasing chain 0 <= x_1 <= ... <= x_m: norms nondecreasing, the last one
/// the maximum, and mu_t(x_n) nondecreasing in n on a t-grid. Non-monotone
/// chains are rejected with Errc::validation.
ExperimentReport fatou_experiment(const OrliczFunction& f, std::span<const MatrixElement> chain, double tol = 1e-8);

struct TruncationOptions {
  std::vector<double> levels;  // empty: truncation_levels() of the profile
  double eps = 0.5;            // scale of the ||(x - x_n)/eps|| <= 2 check
  double tol = 1e-9;
};

ExperimentReport truncation_experiment(const OrliczFunction& f, const MatrixElement& x, const TruncationOptions& options = {});
ExperimentReport truncation_experiment(const OrliczFunction& f, const SpectralProfile& x,
                                       const TruncationOptions& options = {});

/// Delta2 gate (default range) for the experiments that need it; fails with
/// Errc::refused otherwise.
Delta2Verdict require_delta2(const OrliczFunction& f, const std::string& experiment);

/// Empirical deltas, each the extremal gap over the sampled directions:
///   modular_floor:   ||x|| >= eps       =>  modular(x) >= delta
///   norm_gap_below:  modular <= 1 - eps =>  ||x|| <= 1 - delta   (eps < 1)
///   norm_gap_above:  modular >= 1 + eps =>  ||x|| >= 1 + delta
/// Each direction is probed on the constraint boundary and at a few scales
/// past it. Pass when every estimate is >= floor.
ExperimentReport delta2_lemma_experiments(const OrliczFunction& f, double eps, std::span<const SpectralProfile> directions,
                                          double floor = kDeltaFloor);

using ElementPair = std::pair<MatrixElement, MatrixElement>;

/// Largest delta in (0, 1] (bisection in log delta) such that every pair,
/// with x scaled to modular L * s (s in {1, 3/4, 1/2, 1/4} by index) and y
/// to modular delta, has |modular(x + y) - modular(x)| < eps.
ExperimentReport modular_continuity_experiment(const OrliczFunction& f, double L, double eps,
                                               std::span<const ElementPair> directions, double floor = kDeltaFloor);

struct SuperadditivityReport {
  double lhs = 0.0;  // modular(x + y)
  double rhs = 0.0;  // modular(x) + modular(y)
  bool pass = true;
};

/// modular(x + y) >= modular(x) + modular(y) - tol for positive x, y.
SuperadditivityReport superadditivity_check(const OrliczFunction& f, const MatrixElement& x, const MatrixElement& y,
                                            double tol = 1e-8);

struct MonotonicityOptions {
  double floor = kDeltaFloor;
  /// Rescale y to norms eps and 2 eps; otherwise use y as given and skip
  /// pairs with ||y|| < eps.
  bool rescale_y = true;
};

/// Positive pairs with ||x|| = 1 and ||y|| >= eps: reports min ||x + y|| - 1.
ExperimentReport uniform_monotonicity_experiment(const OrliczFunction& f, double eps,
                                                 std::span<const ElementPair> positive_pairs,
                                                 const MonotonicityOptions& options = {});

/// Hypotheses: modular(x_n) -> modular(x) and x_n -> x in measure. If they
/// hold, checks modular((x_n - x)/2) -> 0 and, under Delta2, ||x_n - x|| -> 0.
ExperimentReport norm_measure_experiment(const OrliczFunction& f, std::span<const MatrixElement> seq,
                                         const MatrixElement& x, std::span<const double> eps_list,
                                         const ConvergenceOptions& options = {});

struct CounterexampleOptions {
  Delta2Options delta2;
  /// alpha_k must satisfy phi((1+1/k) alpha) > 2^k (1 + margin) phi(alpha).
  double selection_margin = 1e-6;
  double overflow_guard = 1e300;
  /// Bound B for the "partial sums exceed B after ceil(B/eps) terms" line.
  double divergence_bound = 1e6;
  double tol = 1e-9;
};

struct CounterexampleResult {
  CounterexampleFamily family;
  ExperimentReport report;
};

/// Builds the atomic family for an Orlicz function failing Delta2 and
/// certifies: the materialized modular eps (2^-n - 2^-K), every tail term of
/// modular((1 + 1/n) x_n) above eps, and ||x_n|| >= n/(n+1).
/// Refuses (Errc::refused) when Delta2 holds on the search range.
CounterexampleResult build_non_delta2_counterexample(const OrliczFunction& f, double epsilon, int atoms, int tail_index,
                                                     const CounterexampleOptions& options = {});

}  // namespace orlicz
