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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orlicz {

/// One piece of a piecewise-linear density: on [start, next start) the
/// density is p(t) = value + slope * (t - start).
struct DensitySegment {
  double start = 0.0;
  double slope = 0.0;
  double value = 0.0;
};

/// A finite-valued Orlicz function phi(u) = integral_0^u p(t) dt, stored
/// through its density p.
///
/// Every instance satisfies p(0) = 0, p(t) > 0 for t > 0, p nondecreasing and
/// right-continuous, p(t) -> infinity. Construction rejects anything else.
///
/// Spec string grammar (used by the CLI and JSON configs):
///
///     spec     := power | "exp" | pwl | "legendre(" spec ")"
///     power    := "power:" kv ("," kv)?      kv := ("p" | "c") "=" real
///     pwl      := "pwl:" segment ("," segment)*
///     segment  := real ":" real (":" real)?  (start : slope [: value])
///
/// `power` requires p > 1 and c > 0 (c defaults to 1). For `pwl` each segment
/// gives its start point and the slope of p on that segment; the optional
/// third field is the right-limit value p(start), which defaults to the
/// continuous continuation of the previous segment. The first segment must
/// start at 0 with value 0 and positive slope, and the last slope must be
/// positive. `pwl:0:1` is phi(u) = u^2 / 2. `legendre(s)` is the numeric
/// complementary function of s.
class OrliczFunction {
 public:
  enum class Kind { power, exp_minus_linear, piecewise_density, legendre_conjugate };

  static OrliczFunction power(double exponent, double coeff = 1.0);
  static OrliczFunction exp_minus_linear();
  static OrliczFunction piecewise(std::vector<DensitySegment> segments);
  static OrliczFunction parse(std::string_view spec);

  /// Numeric Legendre conjugate of `base`: its density is the right-continuous
  /// generalized inverse of base's density.
  static OrliczFunction legendre_conjugate(const OrliczFunction& base);

  Kind kind() const noexcept;
  /// Canonical spec string; parse(spec()) reproduces the function for the
  /// three parseable kinds. Conjugates print as "legendre(<base spec>)".
  std::string spec() const;

  double operator()(double u) const;  // phi(u), u >= 0
  double density(double t) const;     // p(t), t >= 0
  /// inf{t >= 0 : p(t) > s}.
  double density_inverse(double s) const;
  /// The u >= 0 with phi(u) = y.
  double inverse(double y) const;

  // Kind-specific accessors; they fail with Errc::domain on the wrong kind.
  double exponent() const;
  double coefficient() const;
  const std::vector<DensitySegment>& segments() const;
  const OrliczFunction& conjugate_base() const;

  bool operator==(const OrliczFunction& other) const;

 private:
  struct Power {
    double exponent;
    double coeff;
  };
  struct ExpMinusLinear {};
  struct Piecewise {
    std::vector<DensitySegment> segments;
  };
  struct Conjugate {
    std::shared_ptr<const OrliczFunction> base;
  };
  using Rep = std::variant<Power, ExpMinusLinear, Piecewise, Conjugate>;

  explicit OrliczFunction(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

double eval_phi(const OrliczFunction& f, double u);
double eval_density(const OrliczFunction& f, double t);

/// phi together with its complementary function psi(v) = sup_u {u v - phi(u)}.
struct ComplementaryPair {
  enum class Provenance { closed_form, numeric_legendre };

  OrliczFunction phi;
  OrliczFunction psi;
  Provenance provenance;
};

const char* to_string(ComplementaryPair::Provenance p) noexcept;

/// Power functions get the closed-form conjugate c' v^q; everything else gets
/// the numeric Legendre conjugate. The conjugate of a conjugate is its base.
ComplementaryPair complementary(const OrliczFunction& f);

/// phi(u) + psi(v) - u v. Zero (up to rounding) when v = p(u).
double young_gap(const ComplementaryPair& pair, double u, double v);

struct Delta2Options {
  double u_min = 1e-6;
  double u_max = 1e6;
  int grid_size = 1024;
  /// Ratios above this are treated as evidence of unboundedness.
  double unbounded_threshold = 1e6;
  /// Failure is also reported when the ratio is still increasing at u_max and
  /// r(u_max) exceeds growth_factor * r(u_max / 2); functions of power-type
  /// growth keep that quotient near 1.
  double growth_factor = 2.0;
};

struct Delta2Witness {
  enum class Reason { infinite_ratio, ratio_exceeds_threshold, superpolynomial_growth };
  double u = 0.0;
  double ratio = 0.0;      // phi(2u) / phi(u), possibly +inf
  double threshold = 0.0;  // the bound the ratio exceeded
  Reason reason = Reason::ratio_exceeds_threshold;
};

const char* to_string(Delta2Witness::Reason r) noexcept;

/// Range-certified verdict on phi(2u) <= k phi(u). Never a global proof,
/// except for the power family where k = 2^p is exact.
struct Delta2Verdict {
  bool holds_on_range = false;
  double u_min = 0.0;
  double u_max = 0.0;
  double constant_k = 0.0;  // meaningful when holds_on_range
  bool exact = false;       // true for the analytic power-family constant
  std::optional<Delta2Witness> failure_witness;
};

Delta2Verdict delta2_report(const OrliczFunction& f, const Delta2Options& options = {});

}  // namespace orlicz
