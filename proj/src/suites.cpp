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

#include "orlicz/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "orlicz/error.hpp"

namespace orlicz {

namespace {

constexpr std::size_t kMaxWitnesses = 20;
constexpr int kMaxSamples = 100000;

// Streams for the extra draws of one sample.
constexpr std::uint64_t kScaleStream = 10;
constexpr std::uint64_t kChainStream = 20;
constexpr std::uint64_t kUnitaryStream = 40;

class Tally {
 public:
  Tally(std::string name, const SuiteParams& p) {
    report_.name = std::move(name);
    report_.seed = p.seed;
    report_.samples = p.samples;
    report_.params["phi"] = p.phi;
    report_.params["tol"] = p.tol;
    report_.params["check_tol"] = p.check_tol;
  }

  void violation(Json witness) {
    ++violations_;
    report_.verdict = Verdict::violation;
    if (report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(std::move(witness));
  }

  ExperimentReport& report() { return report_; }

  ExperimentReport finish() {
    report_.estimates["violations"] = violations_;
    return std::move(report_);
  }

 private:
  ExperimentReport report_;
  int violations_ = 0;
};

double rel_slack(double tol, double scale) { return tol * std::max(1.0, std::abs(scale)); }

// Sampled elements are rescaled to operator norm in [0.25, 2.5] so every
// Orlicz function stays far from overflow.
MatrixElement draw(const Sampler& s, const TracialAlgebra& a, std::uint64_t i, std::uint64_t stream, bool positive) {
  const double target = s.uniform(i, kScaleStream + stream, 0.25, 2.5);
  return with_operator_norm(s.element(a, i, stream, positive), target);
}

double trace_abs_product(const MatrixElement& x, const MatrixElement& y) {
  double acc = 0.0;
  for (const auto& st : profile_of(x * y).steps()) acc += st.value * st.width;
  return acc;
}

ExperimentReport young_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("young", p);
  const ComplementaryPair pair = complementary(f);
  t.report().params["psi"] = pair.psi.spec();

  constexpr int kGrid = 100;
  const auto grid_point = [](int i, int n) { return 1e-3 * std::pow(5e3, static_cast<double>(i) / (n - 1)); };
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double u = grid_point(i, kGrid);
      const double v = grid_point(j, kGrid);
      const double g = young_gap(pair, u, v);
      min_gap = std::min(min_gap, g);
      if (g < -rel_slack(p.check_tol, u * v)) t.violation({{"check", "young_grid"}, {"u", u}, {"v", v}, {"gap", g}});
    }
  }
  constexpr int kEquality = 1000;
  double max_eq = 0.0;
  for (int i = 0; i < kEquality; ++i) {
    const double u = grid_point(i, kEquality);
    const double v = f.density(u);
    const double g = young_gap(pair, u, v);
    max_eq = std::max(max_eq, std::abs(g));
    if (std::abs(g) > rel_slack(p.check_tol, u * v)) t.violation({{"check", "young_equality"}, {"u", u}, {"v", v}, {"gap", g}});
  }

  const Sampler s({p.seed});
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    const MatrixElement x = draw(s, a, i, 0, false);
    const MatrixElement y = draw(s, a, i, 1, false);
    const double lhs = trace_abs_product(x, y);
    const double rhs = modular(pair.phi, x) + modular(pair.psi, y);
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + rel_slack(p.check_tol, rhs)) t.violation({{"check", "trace_young"}, {"sample", i}, {"lhs", lhs}, {"rhs", rhs}});
  }
  t.report().estimates["min_grid_gap"] = min_gap;
  t.report().estimates["max_equality_gap"] = max_eq;
  t.report().estimates["max_trace_excess"] = worst;
  return t.finish();
}

ExperimentReport sandwich_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("sandwich", p);
  const Sampler s({p.seed});
  const double tol = std::max(p.check_tol, 10.0 * p.tol);
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  for (int i = 0; i < p.samples; ++i) {
    const SpectralProfile x = profile_of(draw(s, s.algebra(i), i, 0, false));
    const double l = luxemburg_norm(f, x, p.tol).value;
    const double o = orlicz_norm(f, x, p.tol).value;
    if (l > 0.0) {
      min_ratio = std::min(min_ratio, o / l);
      max_ratio = std::max(max_ratio, o / l);
    }
    if (l > o + rel_slack(tol, o) || o > 2.0 * l + rel_slack(tol, o)) {
      t.violation({{"sample", i}, {"luxemburg", l}, {"orlicz", o}});
    }
  }
  t.report().estimates["min_orlicz_over_luxemburg"] = min_ratio;
  t.report().estimates["max_orlicz_over_luxemburg"] = max_ratio;
  return t.finish();
}

void absorb(Tally& t, int sample, const ExperimentReport& sub) {
  if (sub.verdict == Verdict::violation) t.violation({{"sample", sample}, {"witnesses", sub.witnesses}});
}

ExperimentReport fatou_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("fatou", p);
  const Sampler s({p.seed});
  constexpr int kChain = 8;
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    std::vector<MatrixElement> chain;
    const MatrixElement base = draw(s, a, i, 0, true);
    if (i % 2 == 0) {
      // Scalar multiples (sum_{k<=n} 2^-k) A.
      double c = 0.0;
      for (int n = 1; n <= kChain; ++n) {
        c += std::ldexp(1.0, -n);
        chain.push_back(base * Complex(c, 0.0));
      }
    } else {
      // Noncommuting positive increments.
      chain.push_back(base);
      for (int n = 1; n < kChain; ++n) {
        const MatrixElement inc = draw(s, a, i, kChainStream + n, true) * Complex(std::ldexp(1.0, -n), 0.0);
        chain.push_back(chain.back() + inc);
      }
    }
    absorb(t, i, fatou_experiment(f, chain, p.tol));
  }
  return t.finish();
}

ExperimentReport truncation_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("truncation", p);
  const Sampler s({p.seed});
  double worst = 0.0;
  for (int i = 0; i < p.samples; ++i) {
    TruncationOptions opt;
    opt.tol = p.check_tol;
    if (p.eps) opt.eps = *p.eps;
    const ExperimentReport sub = truncation_experiment(f, draw(s, s.algebra(i), i, 0, false), opt);
    worst = std::max(worst, sub.estimates.value("reconstruction_error", 0.0));
    absorb(t, i, sub);
  }
  t.report().estimates["max_reconstruction_error"] = worst;
  return t.finish();
}

std::vector<ElementPair> sample_pairs(const SuiteParams& p, bool positive) {
  const Sampler s({p.seed});
  std::vector<ElementPair> pairs;
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    pairs.emplace_back(draw(s, a, i, 0, positive), draw(s, a, i, 1, positive));
  }
  return pairs;
}

ExperimentReport with_seed(ExperimentReport r, const SuiteParams& p) {
  r.seed = p.seed;
  r.params["tol"] = p.tol;
  r.params["check_tol"] = p.check_tol;
  return r;
}

ExperimentReport continuity_suite(const SuiteParams& p, const OrliczFunction& f) {
  const auto pairs = sample_pairs(p, false);
  return with_seed(modular_continuity_experiment(f, p.L.value_or(1.0), p.eps.value_or(0.1), pairs), p);
}

ExperimentReport monotonicity_suite(const SuiteParams& p, const OrliczFunction& f) {
  const auto pairs = sample_pairs(p, true);
  return with_seed(uniform_monotonicity_experiment(f, p.eps.value_or(0.1), pairs), p);
}

ExperimentReport delta2_lemma_suite(const SuiteParams& p, const OrliczFunction& f) {
  const Sampler s({p.seed});
  std::vector<SpectralProfile> dirs;
  for (int i = 0; i < p.samples; ++i) dirs.push_back(profile_of(draw(s, s.algebra(i), i, 0, false)));
  ExperimentReport r = delta2_lemma_experiments(f, p.eps.value_or(0.5), dirs);
  r.samples = p.samples;
  return with_seed(std::move(r), p);
}

ExperimentReport norm_measure_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("norm-measure", p);
  const Sampler s({p.seed});
  constexpr int kTerms = 30;
  const double eps_list[] = {0.1, 0.01};
  int hypotheses_failed = 0;
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    const MatrixElement x = draw(s, a, i, 0, false);
    const MatrixElement y = draw(s, a, i, 1, false);
    std::vector<MatrixElement> seq;
    for (int n = 1; n <= kTerms; ++n) seq.push_back(x + y * Complex(std::ldexp(1.0, -n), 0.0));
    const ExperimentReport sub = norm_measure_experiment(f, seq, x, eps_list);
    if (sub.verdict == Verdict::hypotheses_fail) ++hypotheses_failed;
    absorb(t, i, sub);
  }
  t.report().estimates["hypotheses_failed"] = hypotheses_failed;
  if (t.report().verdict == Verdict::pass && hypotheses_failed > 0) t.report().verdict = Verdict::hypotheses_fail;
  return t.finish();
}

ExperimentReport superadditivity_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("superadditivity", p);
  const Sampler s({p.seed});
  double min_excess = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    const SuperadditivityReport r = superadditivity_check(f, draw(s, a, i, 0, true), draw(s, a, i, 1, true), p.check_tol);
    min_excess = std::min(min_excess, r.lhs - r.rhs);
    if (!r.pass) t.violation({{"sample", i}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  }
  t.report().estimates["min_excess"] = min_excess;
  return t.finish();
}

ExperimentReport submajorization_suite(const SuiteParams& p, const OrliczFunction&) {
  Tally t("submajorization", p);
  const Sampler s({p.seed});
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    const MatrixElement x = draw(s, a, i, 0, false);
    const MatrixElement y = draw(s, a, i, 1, false);
    std::vector<double> grid = breakpoints(profile_of(x + y));
    for (const auto& e : {x, y}) {
      for (double b : breakpoints(profile_of(e))) grid.push_back(2.0 * b);
    }
    std::sort(grid.begin(), grid.end());
    const std::size_t nb = grid.size();
    for (std::size_t k = 0; k + 1 < nb; ++k) grid.push_back(0.5 * (grid[k] + grid[k + 1]));
    const double scale = 1.0 + x.operator_norm() + y.operator_norm();
    const SubmajorizationReport r = check_submajorization(x, y, grid, p.check_tol * scale);
    worst = std::max(worst, r.max_violation);
    if (!r.pass) t.violation({{"sample", i}, {"t", r.witness_t}, {"excess", r.max_violation}});
  }
  t.report().estimates["max_excess"] = worst;
  return t.finish();
}

ExperimentReport axioms_suite(const SuiteParams& p, const OrliczFunction& f) {
  Tally t("axioms", p);
  const Sampler s({p.seed});
  const double ntol = std::min(p.tol, 1e-10);
  const double ctol = std::max(p.check_tol, 10.0 * ntol);
  const auto norm = [&](const MatrixElement& e) { return luxemburg_norm(f, e, ntol).value; };
  const auto onorm = [&](const MatrixElement& e) { return orlicz_norm(f, e, ntol).value; };
  double worst_route = 0.0;
  double worst_unitary = 0.0;
  for (int i = 0; i < p.samples; ++i) {
    const TracialAlgebra a = s.algebra(i);
    const MatrixElement x = draw(s, a, i, 0, false);
    const MatrixElement y = draw(s, a, i, 1, false);
    const double nx = norm(x);
    const double ny = norm(y);
    const auto check = [&](bool ok, const char* what, double lhs, double rhs) {
      if (!ok) t.violation({{"check", what}, {"sample", i}, {"lhs", lhs}, {"rhs", rhs}});
    };
    if (i == 0) check(norm(MatrixElement::zero(a)) == 0.0, "zero", norm(MatrixElement::zero(a)), 0.0);

    const double r = s.uniform(i, 2, 0.0, 3.0);
    const double theta = s.uniform(i, 3, 0.0, 2.0 * M_PI);
    const Complex alpha = std::polar(r, theta);
    const double nax = norm(x * alpha);
    check(std::abs(nax - r * nx) <= rel_slack(ctol, r * nx), "homogeneity", nax, r * nx);

    const double nxy = norm(x + y);
    check(nxy <= nx + ny + rel_slack(ctol, nx + ny), "triangle", nxy, nx + ny);

    const MatrixElement c = with_operator_norm(s.element(a, i, 4, false), s.uniform(i, 5, 0.0, 1.0));
    const double ncx = norm(c * x);
    check(ncx <= nx + rel_slack(ctol, nx), "contraction", ncx, nx);

    const MatrixElement pos = draw(s, a, i, 6, true);
    const MatrixElement bigger = pos + draw(s, a, i, 7, true);
    const double np = norm(pos);
    const double nb = norm(bigger);
    check(np <= nb + rel_slack(ctol, nb), "positive_monotone", np, nb);

    const MatrixElement u = s.unitary(a, i, kUnitaryStream);
    const MatrixElement v = s.unitary(a, i, kUnitaryStream + 1);
    const MatrixElement rotated = u * x * v;
    const double nr = norm(rotated);
    const double ox = onorm(x);
    const double orr = onorm(rotated);
    worst_unitary = std::max({worst_unitary, std::abs(nr - nx) / std::max(1.0, nx), std::abs(orr - ox) / std::max(1.0, ox)});
    check(std::abs(nr - nx) <= rel_slack(ctol, nx), "unitary_luxemburg", nr, nx);
    check(std::abs(orr - ox) <= rel_slack(ctol, ox), "unitary_orlicz", orr, ox);

    const double via_profile = modular(f, x);
    const MatrixElement fx = apply_scalar_function([&](double u0) { return f(u0); }, polar(x).positive_part);
    const double via_calculus = trace(fx).real();
    worst_route = std::max(worst_route, std::abs(via_profile - via_calculus) / std::max(1.0, via_profile));
    check(std::abs(via_profile - via_calculus) <= rel_slack(p.check_tol, via_profile), "modular_routes", via_profile,
          via_calculus);
  }
  t.report().estimates["max_route_difference"] = worst_route;
  t.report().estimates["max_unitary_difference"] = worst_unitary;
  return t.finish();
}

using SuiteFn = ExperimentReport (*)(const SuiteParams&, const OrliczFunction&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"young", young_suite},
      {"sandwich", sandwich_suite},
      {"fatou", fatou_suite},
      {"truncation", truncation_suite},
      {"continuity", continuity_suite},
      {"monotonicity", monotonicity_suite},
      {"norm-measure", norm_measure_suite},
      {"superadditivity", superadditivity_suite},
      {"submajorization", submajorization_suite},
      {"axioms", axioms_suite},
      {"delta2-lemmas", delta2_lemma_suite},
  };
  return m;
}

}  // namespace

MatrixElement with_operator_norm(const MatrixElement& x, double target) {
  const double n = x.operator_norm();
  if (n == 0.0) return x;
  return x * Complex(target / n, 0.0);
}

SuiteParams parse_suite_params(const Json& j) {
  if (!j.is_object()) fail(Errc::parse, "suite params: expected an object");
  SuiteParams p;
  const auto real = [](const Json& v, const std::string& key) {
    if (!v.is_number()) fail(Errc::parse, "suite params: \"" + key + "\" must be a number");
    return v.get<double>();
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "phi") {
      if (!v.is_string()) fail(Errc::parse, "suite params: \"phi\" must be a string");
      p.phi = v.get<std::string>();
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) fail(Errc::parse, "suite params: \"seed\" must be an unsigned integer");
      p.seed = v.get<std::uint64_t>();
    } else if (key == "samples") {
      if (!v.is_number_integer()) fail(Errc::parse, "suite params: \"samples\" must be an integer");
      p.samples = v.get<int>();
    } else if (key == "eps") {
      p.eps = real(v, key);
    } else if (key == "L") {
      p.L = real(v, key);
    } else if (key == "tol") {
      p.tol = real(v, key);
    } else if (key == "check_tol") {
      p.check_tol = real(v, key);
    } else {
      fail(Errc::parse, "suite params: unknown key \"" + key + "\"");
    }
  }
  return p;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : registry()) out.push_back(k);
    return out;
  }();
  return names;
}

ExperimentReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) fail(Errc::domain, "unknown suite \"" + name + "\"");
  if (params.samples < 1 || params.samples > kMaxSamples) {
    fail(Errc::domain, "suite: samples must be in [1, " + std::to_string(kMaxSamples) + "]");
  }
  if (!(params.tol > 0.0) || !(params.check_tol > 0.0)) fail(Errc::domain, "suite: tolerances must be > 0");
  if (params.eps && !(*params.eps > 0.0)) fail(Errc::domain, "suite: eps must be > 0");
  if (params.L && !(*params.L > 0.0)) fail(Errc::domain, "suite: L must be > 0");
  const OrliczFunction f = OrliczFunction::parse(params.phi);
  ExperimentReport r = it->second(params, f);
  r.name = name;
  r.seed = params.seed;
  r.params["phi"] = params.phi;
  if (params.eps) r.params["eps"] = *params.eps;
  if (params.L) r.params["L"] = *params.L;
  return r;
}

}  // namespace orlicz
