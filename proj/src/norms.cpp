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

#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orlicz/error.hpp"
#include "orlicz/numeric_format.hpp"

namespace orlicz {

const char* to_string(NormMethod m) noexcept {
  switch (m) {
    case NormMethod::closed_form: return "closed_form";
    case NormMethod::bisection: return "bisection";
    case NormMethod::amemiya_minimization: return "amemiya_minimization";
    case NormMethod::dual_bruteforce: return "dual_bruteforce";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBracketGuard = 2200;

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) fail(Errc::domain, "tolerance must be finite and > 0, got " + format_real(tol));
}

// modular(scale * x) without building the scaled profile.
double scaled_modular(const OrliczFunction& f, const SpectralProfile& x, double scale) {
  double acc = 0.0;
  for (const auto& s : x.steps()) {
    const double arg = s.value * scale;
    if (!std::isfinite(arg)) return kInf;
    acc += f(arg) * s.width;
  }
  return acc;
}

}  // namespace

double modular(const OrliczFunction& f, const SpectralProfile& x) { return integrate_phi_profile(f, x); }

double modular(const OrliczFunction& f, const MatrixElement& x) { return modular(f, profile_of(x)); }

NormResult luxemburg_norm(const OrliczFunction& f, const SpectralProfile& x, double tol) {
  require_tol(tol);
  if (x.empty()) return {0.0, NormMethod::closed_form, 0, 0.0};

  if (f.kind() == OrliczFunction::Kind::power) {
    // Factor out the largest value so that v^p cannot overflow.
    const double p = f.exponent();
    const double top = x.max_value();
    double acc = 0.0;
    for (const auto& s : x.steps()) acc += std::pow(s.value / top, p) * s.width;
    return {top * std::pow(f.coefficient() * acc, 1.0 / p), NormMethod::closed_form, 0, 0.0};
  }

  // g(lambda) = modular(x / lambda) is continuous and nonincreasing; find
  // lo < hi with g(lo) > 1 >= g(hi).
  auto admissible = [&](double lambda) { return scaled_modular(f, x, 1.0 / lambda) <= 1.0; };
  double lo = 1.0;
  double hi = 1.0;
  int iterations = 0;
  if (admissible(1.0)) {
    lo = 0.5;
    while (admissible(lo)) {
      hi = lo;
      lo *= 0.5;
      if (++iterations > kBracketGuard || lo == 0.0) fail(Errc::numeric, "luxemburg_norm: lower bracket not found");
    }
  } else {
    hi = 2.0;
    while (!admissible(hi)) {
      lo = hi;
      hi *= 2.0;
      if (++iterations > kBracketGuard || !std::isfinite(hi)) fail(Errc::numeric, "luxemburg_norm: upper bracket not found");
    }
  }
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (admissible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  return {hi, NormMethod::bisection, iterations, (hi - lo) / hi};
}

NormResult luxemburg_norm(const OrliczFunction& f, const MatrixElement& x, double tol) {
  return luxemburg_norm(f, profile_of(x), tol);
}

NormResult orlicz_norm(const OrliczFunction& f, const SpectralProfile& x, double tol) {
  require_tol(tol);
  if (x.empty()) return {0.0, NormMethod::amemiya_minimization, 0, 0.0};

  // Work in s = log k.
  auto objective = [&](double s) {
    const double k = std::exp(s);
    return (1.0 + scaled_modular(f, x, k)) / k;
  };

  const double lux = luxemburg_norm(f, x, std::min(tol, 1e-6)).value;
  double m = -std::log(lux);
  double fm = objective(m);
  if (!std::isfinite(fm)) {
    fail(Errc::numeric, "orlicz_norm: objective not finite at k = 1/||x|| = " + format_real(1.0 / lux));
  }
  const double step0 = std::log(2.0);
  double a = m - step0;
  double b = m + step0;
  double fa = objective(a);
  double fb = objective(b);
  int iterations = 0;
  double step = step0;
  while (fa < fm) {
    b = m;
    fb = fm;
    m = a;
    fm = fa;
    step *= 1.6;
    a = m - step;
    fa = objective(a);
    if (++iterations > kBracketGuard) fail(Errc::numeric, "orlicz_norm: minimum not bracketed below k = " + format_real(std::exp(m)));
  }
  step = step0;
  while (fb < fm) {
    a = m;
    fa = fm;
    m = b;
    fm = fb;
    step *= 1.6;
    b = m + step;
    fb = objective(b);
    if (++iterations > kBracketGuard) fail(Errc::numeric, "orlicz_norm: minimum not bracketed above k = " + format_real(std::exp(m)));
  }

  // Golden section on [a, b].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double best = fm;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
    best = std::min({best, fc, fd});
    if (++iterations > kBracketGuard) break;
  }
  return {best, NormMethod::amemiya_minimization, iterations, b - a};
}

NormResult orlicz_norm(const OrliczFunction& f, const MatrixElement& x, double tol) {
  return orlicz_norm(f, profile_of(x), tol);
}

double orlicz_norm_dual_bruteforce(const OrliczFunction& f, const SpectralProfile& x, int resolution) {
  if (x.size() > 4) fail(Errc::validation, "orlicz_norm_dual_bruteforce handles at most 4 steps, got " + std::to_string(x.size()));
  if (resolution < 1) fail(Errc::domain, "orlicz_norm_dual_bruteforce: resolution must be >= 1");
  if (x.empty()) return 0.0;

  const OrliczFunction psi = complementary(f).psi;
  const auto& steps = x.steps();
  const std::size_t m = steps.size();

  // Contribution of step i when it receives budget b = psi(g_i) w_i.
  auto gain = [&](std::size_t i, double b) {
    if (b <= 0.0) return 0.0;
    return steps[i].value * steps[i].width * psi.inverse(b / steps[i].width);
  };
  auto total = [&](const std::vector<double>& budget) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += gain(i, budget[i]);
    return acc;
  };

  // Grid over compositions of `resolution` into m parts.
  std::vector<double> best_budget(m, 0.0);
  best_budget[0] = 1.0;
  double best = total(best_budget);
  std::vector<int> parts(m, 0);
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == m) {
      parts[i] = left;
      std::vector<double> budget(m);
      for (std::size_t j = 0; j < m; ++j) budget[j] = static_cast<double>(parts[j]) / resolution;
      const double v = total(budget);
      if (v > best) {
        best = v;
        best_budget = budget;
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      parts[i] = k;
      self(self, i + 1, left - k);
    }
  };
  visit(visit, 0, resolution);

  // Pairwise exchange: move budget between two steps, keeping the sum fixed.
  // Each one-dimensional restriction is concave since psi^{-1} is concave.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int sweep = 0; sweep < 400 && m > 1; ++sweep) {
    double gained = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double pool = best_budget[i] + best_budget[j];
        if (pool <= 0.0) continue;
        auto h = [&](double bi) { return gain(i, bi) + gain(j, pool - bi); };
        double a = 0.0;
        double b = pool;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double hc = h(c);
        double hd = h(d);
        while (b - a > 1e-15 * pool) {
          if (hc >= hd) {
            b = d;
            d = c;
            hd = hc;
            c = b - inv_phi * (b - a);
            hc = h(c);
          } else {
            a = c;
            c = d;
            hc = hd;
            d = a + inv_phi * (b - a);
            hd = h(d);
          }
        }
        const double cand = 0.5 * (a + b);
        const double before = h(best_budget[i]);
        const double after = h(cand);
        if (after > before) {
          gained += after - before;
          best_budget[i] = cand;
          best_budget[j] = pool - cand;
        }
      }
    }
    if (gained <= 1e-15 * std::max(1.0, best)) break;
  }
  return total(best_budget);
}

double orlicz_norm_dual_bruteforce(const OrliczFunction& f, const MatrixElement& x, int resolution) {
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const Matrix& m = x.block(b);
    const Matrix off = m - Matrix(m.diagonal().asDiagonal());
    if (off.size() > 0 && off.cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
      fail(Errc::validation, "orlicz_norm_dual_bruteforce: block " + std::to_string(b) + " is not diagonal");
    }
  }
  return orlicz_norm_dual_bruteforce(f, profile_of(x), resolution);
}

Membership membership(const OrliczFunction&, const SpectralProfile&) {
  return {true, true, "finite trace and bounded spectrum: tau(phi(l|x|)) is a finite sum for every l > 0"};
}

Membership membership(const OrliczFunction& f, const MatrixElement& x) { return membership(f, profile_of(x)); }

Membership membership(const OrliczFunction& f, const CounterexampleFamily& family) {
  if (!(f == family.phi)) fail(Errc::domain, "membership: family was built for a different Orlicz function");
  Membership m;
  const double at_one = family.infinite_modular();
  m.in_L_phi = std::isfinite(at_one);
  const double scale = 1.0 + 1.0 / family.tail_index;
  const DivergenceCertificate cert = divergence_certificate(family, scale);
  m.in_E_phi = !cert.every_term_exceeds_epsilon;
  m.reason = "tau(phi(x_n)) = " + format_real(at_one) + " at scale 1; at scale " + format_real(scale) + " each of the " +
             std::to_string(cert.terms.size()) + " certified tail terms " +
             (cert.every_term_exceeds_epsilon ? "exceeds" : "does NOT exceed") + " epsilon = " + format_real(family.epsilon) +
             " (min term " + format_real(cert.min_term) + ")";
  return m;
}

std::vector<double> truncation_levels(const SpectralProfile& x) {
  std::vector<double> levels{0.0};
  const auto& steps = x.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    levels.push_back(steps[i].value);
    const double next = i + 1 < steps.size() ? steps[i + 1].value : 0.0;
    levels.push_back(0.5 * (steps[i].value + next));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

namespace {

TruncationTail tail_entry(const OrliczFunction& f, const SpectralProfile& tail, double level, double tol) {
  TruncationTail t;
  t.level = level;
  t.luxemburg = luxemburg_norm(f, tail).value;
  t.orlicz = orlicz_norm(f, tail).value;
  t.modular_bound = 1.0 + modular(f, tail);
  t.bound_holds = t.luxemburg <= t.orlicz + tol * std::max(1.0, t.orlicz) &&
                  t.orlicz <= t.modular_bound + tol * std::max(1.0, t.modular_bound);
  return t;
}

DistanceReport summarize(std::vector<TruncationTail> tails, double tol) {
  DistanceReport r;
  r.distance_luxemburg = kInf;
  r.distance_orlicz = kInf;
  for (const auto& t : tails) {
    r.distance_luxemburg = std::min(r.distance_luxemburg, t.luxemburg);
    r.distance_orlicz = std::min(r.distance_orlicz, t.orlicz);
    r.pass = r.pass && t.bound_holds;
  }
  r.pass = r.pass && r.distance_luxemburg <= 1.0 + tol && r.distance_orlicz <= 1.0 + tol;
  r.tails = std::move(tails);
  return r;
}

}  // namespace

DistanceReport distance_to_E_check(const OrliczFunction& f, const SpectralProfile& x, double tol) {
  require_tol(tol);
  std::vector<TruncationTail> tails;
  for (double n : truncation_levels(x)) tails.push_back(tail_entry(f, x.tail(n), n, tol));
  return summarize(std::move(tails), tol);
}

DistanceReport distance_to_E_check(const OrliczFunction& f, const MatrixElement& x, double tol) {
  require_tol(tol);
  std::vector<TruncationTail> tails;
  for (double n : truncation_levels(profile_of(x))) {
    tails.push_back(tail_entry(f, profile_of(x - truncate(x, n)), n, tol));
  }
  return summarize(std::move(tails), tol);
}

double scale_for_modular(const OrliczFunction& f, const SpectralProfile& x, double target) {
  if (x.empty()) fail(Errc::domain, "scale_for_modular: zero element has modular 0 at every scale");
  if (!(target > 0.0) || !std::isfinite(target)) fail(Errc::domain, "scale_for_modular: target must be finite and > 0");
  if (f.kind() == OrliczFunction::Kind::power) {
    return std::pow(target / modular(f, x), 1.0 / f.exponent());
  }
  double lo = 1.0;
  double hi = 1.0;
  int guard = 0;
  if (scaled_modular(f, x, 1.0) >= target) {
    lo = 0.5;
    while (scaled_modular(f, x, lo) >= target) {
      hi = lo;
      lo *= 0.5;
      if (++guard > kBracketGuard || lo == 0.0) fail(Errc::numeric, "scale_for_modular: bracket not found");
    }
  } else {
    hi = 2.0;
    while (scaled_modular(f, x, hi) < target) {
      lo = hi;
      hi *= 2.0;
      if (++guard > kBracketGuard || !std::isfinite(hi)) fail(Errc::numeric, "scale_for_modular: bracket not found");
    }
  }
  for (int i = 0; i < 200 && hi - lo > 2 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (scaled_modular(f, x, mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace orlicz
