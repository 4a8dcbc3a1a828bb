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

#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "orlicz/error.hpp"
#include "orlicz/numeric_format.hpp"

namespace orlicz {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::construction: return "construction";
    case Errc::shape: return "shape";
    case Errc::non_finite: return "non_finite";
    case Errc::validation: return "validation";
    case Errc::refused: return "refused";
    case Errc::parse: return "parse";
    case Errc::numeric: return "numeric";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonneg(double x, const char* what) {
  if (std::isnan(x) || x < 0.0) {
    fail(Errc::domain, std::string(what) + " must be >= 0, got " + format_real(x));
  }
}

// e^u - u - 1 without cancellation near 0.
double exp_minus_linear_value(double u) {
  if (u < 1e-2) {
    // Horner form of u^2/2 + u^3/6 + ... + u^7/5040; truncation error < u^8/40320.
    const double s = 1.0 / 2 + u * (1.0 / 6 + u * (1.0 / 24 + u * (1.0 / 120 + u * (1.0 / 720 + u / 5040))));
    return u * u * s;
  }
  return std::expm1(u) - u;
}

double piecewise_density(const std::vector<DensitySegment>& segs, double t) {
  // Last segment whose start is <= t; at a breakpoint this is the right limit.
  auto it = std::upper_bound(segs.begin(), segs.end(), t,
                             [](double v, const DensitySegment& s) { return v < s.start; });
  const DensitySegment& s = *(it - 1);
  return s.value + s.slope * (t - s.start);
}

double piecewise_phi(const std::vector<DensitySegment>& segs, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double a = segs[i].start;
    if (a >= u) break;
    const double b = (i + 1 < segs.size()) ? std::min(segs[i + 1].start, u) : u;
    const double len = b - a;
    acc += segs[i].value * len + 0.5 * segs[i].slope * len * len;
  }
  return acc;
}

double piecewise_density_inverse(const std::vector<DensitySegment>& segs, double s) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const DensitySegment& seg = segs[i];
    if (seg.value > s) return seg.start;
    const bool last = i + 1 == segs.size();
    if (seg.slope > 0.0) {
      const double t = seg.start + (s - seg.value) / seg.slope;
      if (last || t < segs[i + 1].start) return t;
    }
  }
  // Unreachable: the last slope is positive.
  return kInf;
}

std::vector<DensitySegment> validated(std::vector<DensitySegment> segs) {
  if (segs.empty()) fail(Errc::construction, "piecewise density needs at least one segment");
  for (const auto& s : segs) {
    if (!std::isfinite(s.start) || !std::isfinite(s.slope) || !std::isfinite(s.value)) {
      fail(Errc::construction, "piecewise density: non-finite parameter");
    }
    if (s.slope < 0.0) fail(Errc::construction, "piecewise density: negative slope at t=" + format_real(s.start));
  }
  if (segs.front().start != 0.0 || segs.front().value != 0.0) {
    fail(Errc::construction, "piecewise density must start at t=0 with p(0)=0");
  }
  if (segs.front().slope <= 0.0) {
    fail(Errc::construction, "piecewise density: first slope must be positive so that p(t) > 0 for t > 0");
  }
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const auto& prev = segs[i - 1];
    auto& cur = segs[i];
    if (!(cur.start > prev.start)) fail(Errc::construction, "piecewise density: breakpoints must be strictly increasing");
    const double cont = prev.value + prev.slope * (cur.start - prev.start);
    if (cur.value < cont) {
      if (cont - cur.value > 1e-12 * std::max(1.0, cont)) {
        fail(Errc::construction, "piecewise density decreases at t=" + format_real(cur.start));
      }
      cur.value = cont;
    }
  }
  if (segs.back().slope <= 0.0) {
    fail(Errc::construction, "piecewise density: last slope must be positive so that p(t) -> infinity");
  }
  return segs;
}

double parse_real(std::string_view token, std::string_view spec) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    fail(Errc::parse, "bad number '" + std::string(token) + "' in Orlicz spec '" + std::string(spec) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

OrliczFunction OrliczFunction::power(double exponent, double coeff) {
  if (!std::isfinite(exponent) || !(exponent > 1.0)) {
    fail(Errc::construction, "power exponent must be > 1, got " + format_real(exponent));
  }
  if (!std::isfinite(coeff) || !(coeff > 0.0)) {
    fail(Errc::construction, "power coefficient must be > 0, got " + format_real(coeff));
  }
  return OrliczFunction(Power{exponent, coeff});
}

OrliczFunction OrliczFunction::exp_minus_linear() { return OrliczFunction(ExpMinusLinear{}); }

OrliczFunction OrliczFunction::piecewise(std::vector<DensitySegment> segments) {
  return OrliczFunction(Piecewise{validated(std::move(segments))});
}

OrliczFunction OrliczFunction::legendre_conjugate(const OrliczFunction& base) {
  return OrliczFunction(Conjugate{std::make_shared<const OrliczFunction>(base)});
}

OrliczFunction OrliczFunction::parse(std::string_view spec) {
  if (spec == "exp") return exp_minus_linear();
  if (spec.starts_with("legendre(") && spec.ends_with(")")) {
    return legendre_conjugate(parse(spec.substr(9, spec.size() - 10)));
  }
  if (spec.starts_with("power:")) {
    std::optional<double> p;
    std::optional<double> c;
    for (std::string_view kv : split(spec.substr(6), ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) fail(Errc::parse, "expected key=value in '" + std::string(spec) + "'");
      const std::string_view key = kv.substr(0, eq);
      const double v = parse_real(kv.substr(eq + 1), spec);
      std::optional<double>* slot = key == "p" ? &p : key == "c" ? &c : nullptr;
      if (slot == nullptr) fail(Errc::parse, "unknown key '" + std::string(key) + "' in '" + std::string(spec) + "'");
      if (slot->has_value()) fail(Errc::parse, "duplicate key '" + std::string(key) + "' in '" + std::string(spec) + "'");
      *slot = v;
    }
    if (!p) fail(Errc::parse, "power spec needs p=<real>: '" + std::string(spec) + "'");
    return power(*p, c.value_or(1.0));
  }
  if (spec.starts_with("pwl:")) {
    std::vector<DensitySegment> segs;
    for (std::string_view item : split(spec.substr(4), ',')) {
      const auto fields = split(item, ':');
      if (fields.size() != 2 && fields.size() != 3) {
        fail(Errc::parse, "pwl segment must be start:slope[:value], got '" + std::string(item) + "'");
      }
      DensitySegment seg;
      seg.start = parse_real(fields[0], spec);
      seg.slope = parse_real(fields[1], spec);
      if (fields.size() == 3) {
        seg.value = parse_real(fields[2], spec);
      } else if (!segs.empty()) {
        const auto& prev = segs.back();
        seg.value = prev.value + prev.slope * (seg.start - prev.start);
      }
      segs.push_back(seg);
    }
    return piecewise(std::move(segs));
  }
  fail(Errc::parse, "unknown Orlicz spec '" + std::string(spec) + "' (expected power:..., exp, pwl:... or legendre(...))");
}

OrliczFunction::Kind OrliczFunction::kind() const noexcept {
  switch (rep_.index()) {
    case 0: return Kind::power;
    case 1: return Kind::exp_minus_linear;
    case 2: return Kind::piecewise_density;
    default: return Kind::legendre_conjugate;
  }
}

std::string OrliczFunction::spec() const {
  struct Printer {
    std::string operator()(const Power& p) const {
      std::string s = "power:p=" + shortest_real(p.exponent);
      if (p.coeff != 1.0) s += ",c=" + shortest_real(p.coeff);
      return s;
    }
    std::string operator()(const ExpMinusLinear&) const { return "exp"; }
    std::string operator()(const Piecewise& pw) const {
      std::string s = "pwl:";
      for (std::size_t i = 0; i < pw.segments.size(); ++i) {
        const auto& seg = pw.segments[i];
        if (i > 0) s += ',';
        s += shortest_real(seg.start) + ":" + shortest_real(seg.slope);
        if (i > 0) {
          const auto& prev = pw.segments[i - 1];
          if (seg.value != prev.value + prev.slope * (seg.start - prev.start)) s += ":" + shortest_real(seg.value);
        }
      }
      return s;
    }
    std::string operator()(const Conjugate& c) const { return "legendre(" + c.base->spec() + ")"; }
  };
  return std::visit(Printer{}, rep_);
}

double OrliczFunction::operator()(double u) const {
  require_nonneg(u, "phi argument u");
  struct Eval {
    double u;
    double operator()(const Power& p) const { return p.coeff * std::pow(u, p.exponent); }
    double operator()(const ExpMinusLinear&) const { return exp_minus_linear_value(u); }
    double operator()(const Piecewise& pw) const { return piecewise_phi(pw.segments, u); }
    double operator()(const Conjugate& c) const {
      // Young equality at the maximizer q(u) of s u - phi(s).
      const double q = c.base->density_inverse(u);
      return std::max(0.0, u * q - (*c.base)(q));
    }
  };
  return std::visit(Eval{u}, rep_);
}

double OrliczFunction::density(double t) const {
  require_nonneg(t, "density argument t");
  struct Eval {
    double t;
    double operator()(const Power& p) const { return p.coeff * p.exponent * std::pow(t, p.exponent - 1.0); }
    double operator()(const ExpMinusLinear&) const { return std::expm1(t); }
    double operator()(const Piecewise& pw) const { return piecewise_density(pw.segments, t); }
    double operator()(const Conjugate& c) const { return c.base->density_inverse(t); }
  };
  return std::visit(Eval{t}, rep_);
}

double OrliczFunction::density_inverse(double s) const {
  require_nonneg(s, "density level s");
  struct Eval {
    double s;
    double operator()(const Power& p) const {
      return std::pow(s / (p.coeff * p.exponent), 1.0 / (p.exponent - 1.0));
    }
    double operator()(const ExpMinusLinear&) const { return std::log1p(s); }
    double operator()(const Piecewise& pw) const { return piecewise_density_inverse(pw.segments, s); }
    double operator()(const Conjugate& c) const { return c.base->density(s); }
  };
  return std::visit(Eval{s}, rep_);
}

double OrliczFunction::inverse(double y) const {
  require_nonneg(y, "phi level y");
  if (const auto* p = std::get_if<Power>(&rep_)) return std::pow(y / p->coeff, 1.0 / p->exponent);
  if (y == 0.0) return 0.0;
  // Newton on phi(u) = y (phi' = p), falling back to bisection whenever the
  // step leaves the bracket.
  double lo = 0.0;
  double hi = 1.0;
  for (int guard = 0; !((*this)(hi) >= y); ++guard) {
    lo = hi;
    hi *= 2.0;
    if (guard > 2000 || !std::isfinite(hi)) fail(Errc::numeric, "inverse: target " + format_real(y) + " not bracketed");
  }
  double u = hi;
  for (int i = 0; i < 200; ++i) {
    const double r = (*this)(u) - y;
    if (r >= 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double d = density(u);
    double next = d > 0.0 ? u - r / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 2 * std::numeric_limits<double>::epsilon() * u || hi - lo <= 2 * std::numeric_limits<double>::epsilon() * hi) {
      return next;
    }
    u = next;
  }
  return u;
}

double OrliczFunction::exponent() const {
  if (const auto* p = std::get_if<Power>(&rep_)) return p->exponent;
  fail(Errc::domain, "exponent() requires a power function");
}

double OrliczFunction::coefficient() const {
  if (const auto* p = std::get_if<Power>(&rep_)) return p->coeff;
  fail(Errc::domain, "coefficient() requires a power function");
}

const std::vector<DensitySegment>& OrliczFunction::segments() const {
  if (const auto* p = std::get_if<Piecewise>(&rep_)) return p->segments;
  fail(Errc::domain, "segments() requires a piecewise density");
}

const OrliczFunction& OrliczFunction::conjugate_base() const {
  if (const auto* c = std::get_if<Conjugate>(&rep_)) return *c->base;
  fail(Errc::domain, "conjugate_base() requires a Legendre conjugate");
}

bool OrliczFunction::operator==(const OrliczFunction& other) const {
  if (rep_.index() != other.rep_.index()) return false;
  switch (kind()) {
    case Kind::power: {
      const auto& a = std::get<Power>(rep_);
      const auto& b = std::get<Power>(other.rep_);
      return a.exponent == b.exponent && a.coeff == b.coeff;
    }
    case Kind::exp_minus_linear: return true;
    case Kind::piecewise_density: {
      const auto& a = std::get<Piecewise>(rep_).segments;
      const auto& b = std::get<Piecewise>(other.rep_).segments;
      return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const DensitySegment& x, const DensitySegment& y) {
        return x.start == y.start && x.slope == y.slope && x.value == y.value;
      });
    }
    case Kind::legendre_conjugate: return conjugate_base() == other.conjugate_base();
  }
  return false;
}

double eval_phi(const OrliczFunction& f, double u) { return f(u); }

double eval_density(const OrliczFunction& f, double t) { return f.density(t); }

const char* to_string(ComplementaryPair::Provenance p) noexcept {
  return p == ComplementaryPair::Provenance::closed_form ? "closed_form" : "numeric_legendre";
}

ComplementaryPair complementary(const OrliczFunction& f) {
  using Prov = ComplementaryPair::Provenance;
  switch (f.kind()) {
    case OrliczFunction::Kind::power: {
      // sup_u {uv - c u^p} is attained at u = (v/(cp))^{1/(p-1)}.
      const double p = f.exponent();
      const double c = f.coefficient();
      const double q = p / (p - 1.0);
      const double c_conj = (p - 1.0) * c * std::pow(c * p, -q);
      return {f, OrliczFunction::power(q, c_conj), Prov::closed_form};
    }
    case OrliczFunction::Kind::legendre_conjugate:
      return {f, f.conjugate_base(), Prov::numeric_legendre};
    default:
      return {f, OrliczFunction::legendre_conjugate(f), Prov::numeric_legendre};
  }
}

double young_gap(const ComplementaryPair& pair, double u, double v) {
  require_nonneg(u, "u");
  require_nonneg(v, "v");
  return pair.phi(u) + pair.psi(v) - u * v;
}

const char* to_string(Delta2Witness::Reason r) noexcept {
  switch (r) {
    case Delta2Witness::Reason::infinite_ratio: return "infinite_ratio";
    case Delta2Witness::Reason::ratio_exceeds_threshold: return "ratio_exceeds_threshold";
    case Delta2Witness::Reason::superpolynomial_growth: return "superpolynomial_growth";
  }
  return "unknown";
}

namespace {

double doubling_ratio(const OrliczFunction& f, double u) {
  const double a = f(u);
  const double b = f(2.0 * u);
  if (!std::isfinite(b) || (a == 0.0 && b > 0.0)) return kInf;
  if (a == 0.0) return 0.0;
  return b / a;
}

}  // namespace

Delta2Verdict delta2_report(const OrliczFunction& f, const Delta2Options& o) {
  if (!(o.u_min > 0.0) || !(o.u_max > o.u_min) || !std::isfinite(o.u_max)) {
    fail(Errc::domain, "delta2_report needs 0 < u_min < u_max < inf");
  }
  if (o.grid_size < 2) fail(Errc::domain, "delta2_report needs grid_size >= 2");
  if (!(o.unbounded_threshold > 0.0) || !(o.growth_factor > 1.0)) {
    fail(Errc::domain, "delta2_report needs unbounded_threshold > 0 and growth_factor > 1");
  }

  Delta2Verdict verdict;
  verdict.u_min = o.u_min;
  verdict.u_max = o.u_max;

  if (f.kind() == OrliczFunction::Kind::power) {
    verdict.holds_on_range = true;
    verdict.exact = true;
    verdict.constant_k = std::exp2(f.exponent());
    return verdict;
  }

  const double log_span = std::log(o.u_max / o.u_min);
  double sup = 0.0;
  double prev = 0.0;
  double last = 0.0;
  for (int i = 0; i < o.grid_size; ++i) {
    const double u = (i + 1 == o.grid_size) ? o.u_max : o.u_min * std::exp(log_span * i / (o.grid_size - 1));
    const double r = doubling_ratio(f, u);
    if (r > o.unbounded_threshold) {
      verdict.failure_witness = Delta2Witness{
          u, r, o.unbounded_threshold,
          std::isinf(r) ? Delta2Witness::Reason::infinite_ratio : Delta2Witness::Reason::ratio_exceeds_threshold};
      return verdict;
    }
    sup = std::max(sup, r);
    prev = last;
    last = r;
  }

  const double half_ratio = doubling_ratio(f, 0.5 * o.u_max);
  if (last > prev && last > o.growth_factor * half_ratio) {
    verdict.failure_witness =
        Delta2Witness{o.u_max, last, o.growth_factor * half_ratio, Delta2Witness::Reason::superpolynomial_growth};
    return verdict;
  }
  verdict.holds_on_range = true;
  verdict.constant_k = sup;
  return verdict;
}

}  // namespace orlicz
