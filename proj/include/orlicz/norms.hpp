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

#include <string>
#include <vector>

#include "orlicz/counterexample.hpp"
#include "orlicz/operator_model.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/svf.hpp"

namespace orlicz {

inline constexpr double kDefaultNormTol = 1e-8;

enum class NormMethod { closed_form, bisection, amemiya_minimization, dual_bruteforce };

const char* to_string(NormMethod m) noexcept;

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::closed_form;
  int iterations = 0;
  /// Relative width of the final bracket (0 for closed forms and for x = 0).
  double residual = 0.0;
};

/// tau(phi(|x|)). Matrix elements go through their profile.
double modular(const OrliczFunction& f, const SpectralProfile& x);
double modular(const OrliczFunction& f, const MatrixElement& x);

/// inf{lambda > 0 : tau(phi(|x| / lambda)) <= 1}.
///
/// Power functions use (c tau(|x|^p))^{1/p}. Otherwise the bracket around
/// the crossing of lambda -> modular(x / lambda) with 1 is bisected down to a
/// relative width of `tol`, and the admissible upper end is returned.
NormResult luxemburg_norm(const OrliczFunction& f, const SpectralProfile& x, double tol = kDefaultNormTol);
NormResult luxemburg_norm(const OrliczFunction& f, const MatrixElement& x, double tol = kDefaultNormTol);

/// Orlicz norm via inf_{k > 0} (1 + modular(k x)) / k, minimized by golden
/// section in log k. The objective is unimodal: k h'(k) - h(k) is
/// nondecreasing for the convex h(k) = 1 + modular(k x).
NormResult orlicz_norm(const OrliczFunction& f, const SpectralProfile& x, double tol = kDefaultNormTol);
NormResult orlicz_norm(const OrliczFunction& f, const MatrixElement& x, double tol = kDefaultNormTol);

/// Dual supremum sup{sum_i mu_i g_i w_i : sum_i psi(g_i) w_i <= 1} over
/// decreasing g aligned with x, searched directly: a simplex grid over the
/// budget split b_i = psi(g_i) w_i, then pairwise exchange refinement.
/// Small-instance oracle: at most 4 steps.
double orlicz_norm_dual_bruteforce(const OrliczFunction& f, const SpectralProfile& x, int resolution = 16);
/// Diagonal elements only (off-diagonal entries must vanish).
double orlicz_norm_dual_bruteforce(const OrliczFunction& f, const MatrixElement& x, int resolution = 16);

struct Membership {
  bool in_L_phi = true;
  bool in_E_phi = true;
  std::string reason;
};

/// Finite profiles and matrix elements are bounded with finite trace, so
/// every modular is finite and both answers are true.
Membership membership(const OrliczFunction& f, const SpectralProfile& x);
Membership membership(const OrliczFunction& f, const MatrixElement& x);
/// in_L_phi via the finite modular epsilon/2^n at scale 1; in_E_phi = false
/// via the divergence certificate at scale 1 + 1/n.
Membership membership(const OrliczFunction& f, const CounterexampleFamily& family);

struct TruncationTail {
  double level = 0.0;          // truncation level n
  double luxemburg = 0.0;      // ||x - x_n||
  double orlicz = 0.0;         // ||x - x_n||°
  double modular_bound = 0.0;  // 1 + modular(x - x_n)
  bool bound_holds = true;     // ||x - x_n|| <= ||x - x_n||° <= 1 + modular(x - x_n)
};

struct DistanceReport {
  std::vector<TruncationTail> tails;
  double distance_luxemburg = 0.0;  // inf over the grid
  double distance_orlicz = 0.0;
  bool pass = true;  // both distances <= 1 + tol and every bound_holds
};

/// Distance from x to E_phi estimated through its spectral truncations.
/// The level grid defaults to 0, the distinct profile values and their
/// midpoints.
DistanceReport distance_to_E_check(const OrliczFunction& f, const SpectralProfile& x, double tol = 1e-9);
DistanceReport distance_to_E_check(const OrliczFunction& f, const MatrixElement& x, double tol = 1e-9);

/// Truncation levels used by distance_to_E_check and the truncation experiment.
std::vector<double> truncation_levels(const SpectralProfile& x);

/// The t >= 0 with modular(t x) = target (x nonzero, target > 0).
double scale_for_modular(const OrliczFunction& f, const SpectralProfile& x, double target);

}  // namespace orlicz
