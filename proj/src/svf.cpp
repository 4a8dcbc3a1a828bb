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

#include "orlicz/svf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orlicz/error.hpp"
#include "orlicz/numeric_format.hpp"

namespace orlicz {

SpectralProfile::SpectralProfile(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (!std::isfinite(s.value) || s.value < 0.0) {
      fail(Errc::validation, "profile step " + std::to_string(i) + ": value must be finite and >= 0");
    }
    if (!std::isfinite(s.width) || !(s.width > 0.0)) {
      fail(Errc::validation, "profile step " + std::to_string(i) + ": width must be finite and > 0");
    }
    if (i > 0 && !(s.value < steps_[i - 1].value)) {
      fail(Errc::validation, "profile values must be strictly decreasing (step " + std::to_string(i) + ": " +
                                 format_real(s.value) + " after " + format_real(steps_[i - 1].value) + ")");
    }
  }
}

double SpectralProfile::total_width() const noexcept {
  double w = 0.0;
  for (const auto& s : steps_) w += s.width;
  return w;
}

SpectralProfile SpectralProfile::scaled(double factor) const {
  const double a = std::abs(factor);
  if (a == 0.0) return {};
  std::vector<Step> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) {
    const double v = s.value * a;
    // Scaling can collapse neighbouring values only through underflow.
    if (!out.empty() && !(v < out.back().value)) {
      out.back().width += s.width;
    } else {
      out.push_back({v, s.width});
    }
  }
  return SpectralProfile(std::move(out));
}

SpectralProfile SpectralProfile::head(double n) const {
  std::vector<Step> out;
  for (const auto& s : steps_) {
    if (s.value <= n) out.push_back(s);
  }
  return SpectralProfile(std::move(out));
}

SpectralProfile SpectralProfile::tail(double n) const {
  std::vector<Step> out;
  for (const auto& s : steps_) {
    if (s.value > n) out.push_back(s);
  }
  return SpectralProfile(std::move(out));
}

SpectralProfile profile_of(const MatrixElement& x) {
  struct Weighted {
    double value;
    double width;
  };
  std::vector<Weighted> all;
  const auto sv = singular_values(x);
  const auto& spec = x.algebra().blocks();
  double smax = 0.0;
  int max_dim = 1;
  for (std::size_t b = 0; b < sv.size(); ++b) {
    max_dim = std::max(max_dim, spec[b].dim);
    for (Eigen::Index i = 0; i < sv[b].size(); ++i) {
      all.push_back({sv[b](i), spec[b].weight});
      smax = std::max(smax, sv[b](i));
    }
  }
  const double zero_thr = smax * max_dim * 4.0 * std::numeric_limits<double>::epsilon();
  std::stable_sort(all.begin(), all.end(), [](const Weighted& a, const Weighted& b) { return a.value > b.value; });

  std::vector<Step> steps;
  for (const auto& w : all) {
    if (!(w.value > zero_thr)) continue;
    if (!steps.empty() && steps.back().value - w.value <= kCoalesceTol * steps.back().value) {
      steps.back().width += w.width;
    } else {
      steps.push_back({w.value, w.width});
    }
  }
  return SpectralProfile(std::move(steps));
}

double distribution_at(const SpectralProfile& profile, double s) {
  if (std::isnan(s) || s < 0.0) fail(Errc::domain, "distribution_at: s must be >= 0");
  double w = 0.0;
  for (const auto& step : profile.steps()) {
    if (step.value > s) w += step.width;
  }
  return w;
}

double distribution_at(const MatrixElement& x, double s) { return distribution_at(profile_of(x), s); }

double mu_at(const SpectralProfile& profile, double t) {
  if (std::isnan(t) || t < 0.0) fail(Errc::domain, "mu_at: t must be >= 0");
  double left = 0.0;
  for (const auto& step : profile.steps()) {
    const double right = left + step.width;
    if (t < right) return step.value;
    left = right;
  }
  return 0.0;
}

double mu_at(const MatrixElement& x, double t) { return mu_at(profile_of(x), t); }

double integrate_phi_profile(const OrliczFunction& f, const SpectralProfile& profile) {
  double acc = 0.0;
  for (const auto& step : profile.steps()) acc += f(step.value) * step.width;
  return acc;
}

SubmajorizationReport check_submajorization(const MatrixElement& x, const MatrixElement& y,
                                            std::span<const double> t_grid, double tol) {
  if (!(x.algebra() == y.algebra())) fail(Errc::shape, "check_submajorization: elements belong to different algebras");
  const SpectralProfile px = profile_of(x);
  const SpectralProfile py = profile_of(y);
  const SpectralProfile psum = profile_of(x + y);
  SubmajorizationReport report;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double v = mu_at(psum, t) - (mu_at(px, 0.5 * t) + mu_at(py, 0.5 * t));
    if (v > report.max_violation) {
      report.max_violation = v;
      report.witness_t = t;
    }
  }
  if (t_grid.empty()) report.max_violation = 0.0;
  report.pass = report.max_violation <= tol;
  return report;
}

std::vector<double> breakpoints(const SpectralProfile& profile) {
  std::vector<double> out{0.0};
  double acc = 0.0;
  for (const auto& s : profile.steps()) {
    acc += s.width;
    out.push_back(acc);
  }
  return out;
}

}  // namespace orlicz
