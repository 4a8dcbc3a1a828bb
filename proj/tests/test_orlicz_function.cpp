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

#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "test_support.hpp"

namespace orlicz {
namespace {

using testing::error_code;
using testing::Gen;

// Oracles.

// sup_{u >= 0} (u v - phi(u)) by ternary search on the concave objective.
double legendre_by_search(const OrliczFunction& f, double v, double hi = 200.0) {
  double lo = 0.0;
  for (int i = 0; i < 300; ++i) {
    const double a = lo + (hi - lo) / 3.0;
    const double b = hi - (hi - lo) / 3.0;
    if (a * v - f(a) < b * v - f(b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  const double u = 0.5 * (lo + hi);
  return u * v - f(u);
}

// integral_a^b q(s) ds by composite Simpson on one smooth piece.
double simpson_q(const OrliczFunction& f, double a, double b) {
  constexpr int n = 20000;
  const double h = (b - a) / n;
  // Endpoints sampled just inside so a jump of q at a or b does not leak in.
  double acc = f.density_inverse(std::nextafter(a, b)) + f.density_inverse(std::nextafter(b, a));
  for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f.density_inverse(a + i * h);
  return acc * h / 3.0;
}

// integral_0^v q(s) ds, split where q jumps (flat pieces of the density).
double conjugate_by_quadrature(const OrliczFunction& f, double v, std::vector<double> jumps = {}) {
  double acc = 0.0;
  double a = 0.0;
  jumps.push_back(v);
  for (double b : jumps) {
    if (b > v) b = v;
    if (b > a) acc += simpson_q(f, a, b);
    a = std::max(a, b);
  }
  return acc;
}

TEST(OrliczFunctionEval, PowerSquareAtThree) { EXPECT_DOUBLE_EQ(OrliczFunction::power(2.0)(3.0), 9.0); }

TEST(OrliczFunctionEval, ExpMinusLinearAtOne) {
  EXPECT_NEAR(OrliczFunction::exp_minus_linear()(1.0), std::exp(1.0) - 2.0, 1e-15);
}

TEST(OrliczFunctionEval, ExpMinusLinearSmallArgumentsKeepRelativeAccuracy) {
  const auto f = OrliczFunction::exp_minus_linear();
  for (double u : {1e-8, 1e-5, 1e-3, 9e-3, 1.1e-2}) {
    double series = 0.0;
    double term = u;
    for (int k = 2; k < 12; ++k) {
      term *= u / k;
      series += term;
    }
    EXPECT_NEAR(f(u) / series, 1.0, 1e-12) << u;
  }
}

TEST(OrliczFunctionEval, PiecewiseIdentityDensityIsHalfSquare) {
  EXPECT_DOUBLE_EQ(OrliczFunction::parse("pwl:0:1")(2.0), 2.0);
}

TEST(OrliczFunctionEval, NegativeArgumentIsDomainError) {
  EXPECT_EQ(error_code([] { OrliczFunction::power(2.0)(-1.0); }), Errc::domain);
  EXPECT_EQ(error_code([] { eval_density(OrliczFunction::exp_minus_linear(), -0.5); }), Errc::domain);
}

TEST(OrliczFunctionDensity, Examples) {
  EXPECT_DOUBLE_EQ(OrliczFunction::power(2.0).density(3.0), 6.0);
  EXPECT_DOUBLE_EQ(OrliczFunction::exp_minus_linear().density(0.0), 0.0);
}

TEST(OrliczFunctionDensity, RightContinuousAtJump) {
  // p(t) = t on [0,1), jumps to 2 at t = 1 and grows with slope 1.
  const auto f = OrliczFunction::parse("pwl:0:1,1:1:2");
  EXPECT_DOUBLE_EQ(f.density(1.0), 2.0);
  EXPECT_NEAR(f.density(std::nextafter(1.0, 0.0)), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(f(2.0), 0.5 + 2.0 + 0.5);
}

TEST(OrliczFunctionDensity, InverseIsGeneralizedRightInverse) {
  const auto f = OrliczFunction::parse("pwl:0:1,1:1:2");
  // inf{t : p(t) > s}: values inside the jump [1, 2) map to t = 1.
  EXPECT_DOUBLE_EQ(f.density_inverse(1.5), 1.0);
  EXPECT_DOUBLE_EQ(f.density_inverse(0.5), 0.5);
  EXPECT_DOUBLE_EQ(f.density_inverse(3.0), 2.0);
}

TEST(OrliczFunctionParse, PowerKeysInAnyOrder) {
  const auto f = OrliczFunction::parse("power:c=2,p=3");
  EXPECT_DOUBLE_EQ(f.exponent(), 3.0);
  EXPECT_DOUBLE_EQ(f.coefficient(), 2.0);
  EXPECT_DOUBLE_EQ(f(2.0), 16.0);
  EXPECT_EQ(OrliczFunction::parse("power:p=2"), OrliczFunction::power(2.0, 1.0));
}

TEST(OrliczFunctionParse, RejectsMalformedSpecs) {
  for (const char* bad : {"", "foo", "power", "power:", "power:p=", "power:p=2,p=3", "power:p=2,q=1", "power:p=x",
                          "pwl:", "pwl:0", "pwl:0:1:0:9", "exp:1", "legendre(exp"}) {
    EXPECT_EQ(error_code([&] { OrliczFunction::parse(bad); }), Errc::parse) << bad;
  }
}

TEST(OrliczFunctionParse, RejectsInvalidFunctions) {
  for (const char* bad : {"power:p=1", "power:p=0.5", "power:p=2,c=0", "power:p=2,c=-1", "pwl:1:1", "pwl:0:0",
                          "pwl:0:1,1:0", "pwl:0:1,1:-1", "pwl:0:1,0.5:1:0.1,2:1", "pwl:0:1,1:1,1:2"}) {
    EXPECT_EQ(error_code([&] { OrliczFunction::parse(bad); }), Errc::construction) << bad;
  }
}

TEST(OrliczFunctionParse, StepDensityWithZeroInitialSlopeIsRejected) {
  // p = 0 on [0,1) then 2: vanishes on (0,1) and is bounded.
  EXPECT_EQ(error_code([] { OrliczFunction::parse("pwl:0:0,1:0:2"); }), Errc::construction);
}

TEST(OrliczFunctionParse, SpecRoundTrip) {
  for (const char* s : {"power:p=2", "power:p=3.5,c=0.25", "exp", "pwl:0:1", "pwl:0:1,1:1:2,2.5:3", "legendre(exp)",
                        "legendre(pwl:0:2,1:0.5)"}) {
    const auto f = OrliczFunction::parse(s);
    EXPECT_EQ(OrliczFunction::parse(f.spec()), f) << s << " -> " << f.spec();
  }
}

TEST(OrliczFunctionInverse, InvertsPhi) {
  for (const char* s : {"power:p=2.5,c=3", "exp", "pwl:0:1,1:1:2,3:0.5", "legendre(exp)"}) {
    const auto f = OrliczFunction::parse(s);
    for (double y : {1e-9, 1e-3, 0.5, 1.0, 7.0, 1e4}) {
      EXPECT_NEAR(f(f.inverse(y)), y, 1e-10 * std::max(1.0, y)) << s << " y=" << y;
    }
  }
}

TEST(OrliczFunctionProperty, ConvexAndMonotoneDensity) {
  Gen g(11);
  for (const char* s : {"power:p=1.5", "power:p=3,c=0.2", "exp", "pwl:0:1,1:0,2:3:4", "legendre(exp)"}) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 500; ++i) {
      const double u1 = g.uniform(0.0, 8.0);
      const double u2 = g.uniform(0.0, 8.0);
      const double l = g.uniform();
      const double lhs = f(l * u1 + (1 - l) * u2);
      const double rhs = l * f(u1) + (1 - l) * f(u2);
      EXPECT_LE(lhs, rhs + 1e-9 * std::max(1.0, rhs)) << s;
      EXPECT_LE(f.density(std::min(u1, u2)), f.density(std::max(u1, u2)) + 1e-12) << s;
    }
  }
}

TEST(Complementary, HalfSquareIsSelfDual) {
  const auto pair = complementary(OrliczFunction::power(2.0, 0.5));
  EXPECT_EQ(pair.provenance, ComplementaryPair::Provenance::closed_form);
  for (double v : {0.0, 0.3, 1.0, 4.0}) EXPECT_NEAR(pair.psi(v), 0.5 * v * v, 1e-14);
}

TEST(Complementary, ThirdCubeGivesHolderConjugate) {
  const auto pair = complementary(OrliczFunction::power(3.0, 1.0 / 3.0));
  for (double v : {0.5, 1.0, 2.0, 9.0}) EXPECT_NEAR(pair.psi(v), (2.0 / 3.0) * std::pow(v, 1.5), 1e-12);
}

TEST(Complementary, ScaledPowerMatchesLegendreSearch) {
  const auto f = OrliczFunction::power(2.5, 3.0);
  const auto pair = complementary(f);
  for (double v : {0.1, 1.0, 5.0, 20.0}) EXPECT_NEAR(pair.psi(v), legendre_by_search(f, v), 1e-9);
}

TEST(Complementary, ExpConjugateAtTwo) {
  const auto pair = complementary(OrliczFunction::exp_minus_linear());
  EXPECT_EQ(pair.provenance, ComplementaryPair::Provenance::numeric_legendre);
  EXPECT_NEAR(pair.psi(2.0), 3.0 * std::log(3.0) - 2.0, 1e-12);
  EXPECT_NEAR(pair.psi(2.0), legendre_by_search(pair.phi, 2.0), 1e-9);
}

TEST(Complementary, NumericConjugateMatchesQuadratureAndSearch) {
  const std::vector<std::pair<const char*, std::vector<double>>> cases = {
      {"exp", {}}, {"pwl:0:1,1:0,2:3:4", {1.0}}, {"pwl:0:0.5,0.7:2", {}}};
  for (const auto& [s, jumps] : cases) {
    const auto f = OrliczFunction::parse(s);
    const auto psi = complementary(f).psi;
    for (double v : {0.05, 0.5, 1.0, 3.0, 6.0}) {
      EXPECT_NEAR(psi(v), conjugate_by_quadrature(f, v, jumps), 1e-7 * std::max(1.0, psi(v))) << s << " v=" << v;
      EXPECT_NEAR(psi(v), legendre_by_search(f, v, 50.0), 1e-9 * std::max(1.0, psi(v))) << s << " v=" << v;
    }
  }
}

TEST(Complementary, BiconjugationRecoversPhi) {
  for (const char* s : {"exp", "pwl:0:1,1:0,2:3:4"}) {
    const auto f = OrliczFunction::parse(s);
    const auto psi = complementary(f).psi;
    for (double u : {0.1, 0.7, 1.5, 2.5, 4.0}) {
      EXPECT_NEAR(legendre_by_search(psi, u, 500.0), f(u), 1e-6) << s << " u=" << u;
    }
  }
}

TEST(Complementary, ConjugateOfConjugateIsBase) {
  const auto f = OrliczFunction::exp_minus_linear();
  EXPECT_EQ(complementary(complementary(f).psi).psi, f);
}

TEST(YoungGap, Examples) {
  const auto half_square = complementary(OrliczFunction::power(2.0, 0.5));
  EXPECT_NEAR(young_gap(half_square, 1.0, 3.0), 2.0, 1e-14);
  EXPECT_NEAR(young_gap(half_square, 2.0, 2.0), 0.0, 1e-14);
  const auto e = complementary(OrliczFunction::exp_minus_linear());
  EXPECT_NEAR(young_gap(e, 1.0, std::exp(1.0) - 1.0), 0.0, 1e-12);
}

TEST(YoungGap, NonNegativeOnGridAndZeroAtDensity) {
  for (const char* s : {"power:p=3", "power:p=1.5,c=2", "exp", "pwl:0:1,1:1:2,2.5:3"}) {
    const auto pair = complementary(OrliczFunction::parse(s));
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const double u = 0.05 * i;
        const double v = 0.08 * j;
        EXPECT_GE(young_gap(pair, u, v), -1e-12 * std::max(1.0, u * v)) << s << " u=" << u << " v=" << v;
      }
      const double u = 0.05 * i;
      EXPECT_LE(std::abs(young_gap(pair, u, pair.phi.density(u))), 1e-9 * std::max(1.0, u)) << s << " u=" << u;
    }
  }
}

TEST(Delta2, PowerConstantIsExact) {
  for (double p : {1.5, 2.0, 3.0}) {
    const auto v = delta2_report(OrliczFunction::power(p));
    EXPECT_TRUE(v.holds_on_range);
    EXPECT_TRUE(v.exact);
    EXPECT_EQ(v.constant_k, std::exp2(p));
    EXPECT_FALSE(v.failure_witness.has_value());
  }
}

TEST(Delta2, ExpFailsNearUpperEnd) {
  Delta2Options o;
  o.u_max = 10.0;
  const auto v = delta2_report(OrliczFunction::exp_minus_linear(), o);
  ASSERT_FALSE(v.holds_on_range);
  ASSERT_TRUE(v.failure_witness.has_value());
  const double expected = (std::exp(20.0) - 21.0) / (std::exp(10.0) - 11.0);
  EXPECT_NEAR(v.failure_witness->u, 10.0, 0.5);
  EXPECT_NEAR(v.failure_witness->ratio / expected, 1.0, 0.05);
}

TEST(Delta2, ExpFailsOnDefaultRangeByThreshold) {
  const auto v = delta2_report(OrliczFunction::exp_minus_linear());
  ASSERT_FALSE(v.holds_on_range);
  EXPECT_GT(v.failure_witness->ratio, 1e6);
}

TEST(Delta2, PiecewiseAndConjugateHold) {
  const auto pwl = delta2_report(OrliczFunction::parse("pwl:0:1,1:1:2,3:0.5"));
  EXPECT_TRUE(pwl.holds_on_range);
  EXPECT_FALSE(pwl.exact);
  EXPECT_LE(pwl.constant_k, 8.0);
  // psi(v) = (1 + v) ln(1 + v) - v grows like v log v.
  EXPECT_TRUE(delta2_report(OrliczFunction::parse("legendre(exp)")).holds_on_range);
}

TEST(Delta2, RejectsBadRange) {
  Delta2Options o;
  o.u_min = 2.0;
  o.u_max = 1.0;
  EXPECT_EQ(error_code([&] { delta2_report(OrliczFunction::power(2.0), o); }), Errc::domain);
  o = {};
  o.grid_size = 1;
  EXPECT_EQ(error_code([&] { delta2_report(OrliczFunction::power(2.0), o); }), Errc::domain);
}

}  // namespace
}  // namespace orlicz
