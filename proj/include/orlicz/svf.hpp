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

#include <span>
#include <vector>

#include "orlicz/operator_model.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Singular values within this relative distance are merged into one step.
inline constexpr double kCoalesceTol = 1e-10;

struct Step {
  double value = 0.0;
  double width = 0.0;

  bool operator==(const Step&) const = default;
};

/// A decreasing right-continuous step function t -> mu_t on [0, inf):
/// mu_t = steps[i].value on the i-th consecutive width interval, 0 after the
/// last one. It is both the singular value function of a matrix element and
/// a commutative element of L0(0, inf) with Lebesgue widths.
class SpectralProfile {
 public:
  SpectralProfile() = default;
  /// Fails with Errc::validation unless values are finite, >= 0 and strictly
  /// decreasing and widths are finite and > 0.
  explicit SpectralProfile(std::vector<Step> steps);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t size() const noexcept { return steps_.size(); }
  double total_width() const noexcept;
  double max_value() const noexcept { return steps_.empty() ? 0.0 : steps_.front().value; }

  /// Profile of |factor| * x.
  SpectralProfile scaled(double factor) const;
  /// Profile of the truncation x_n: values <= n.
  SpectralProfile head(double n) const;
  /// Profile of the tail x - x_n: values > n.
  SpectralProfile tail(double n) const;

  bool operator==(const SpectralProfile&) const = default;

 private:
  std::vector<Step> steps_;
};

SpectralProfile profile_of(const MatrixElement& x);

/// lambda_s = total width of the steps with value > s.
double distribution_at(const SpectralProfile& profile, double s);
double distribution_at(const MatrixElement& x, double s);

/// mu_t, right-continuous in t.
double mu_at(const SpectralProfile& profile, double t);
double mu_at(const MatrixElement& x, double t);

/// integral_0^inf phi(mu_t) dt = sum_i phi(value_i) width_i.
double integrate_phi_profile(const OrliczFunction& f, const SpectralProfile& profile);

struct SubmajorizationReport {
  double max_violation = 0.0;  // max_t mu_t(x+y) - mu_{t/2}(x) - mu_{t/2}(y)
  double witness_t = 0.0;
  bool pass = true;
};

/// Checks mu_t(x + y) <= mu_{t/2}(x) + mu_{t/2}(y) on `t_grid`.
SubmajorizationReport check_submajorization(const MatrixElement& x, const MatrixElement& y,
                                            std::span<const double> t_grid, double tol = 1e-9);

/// Breakpoints of the profile (cumulative widths), with 0 in front.
std::vector<double> breakpoints(const SpectralProfile& profile);

}  // namespace orlicz
