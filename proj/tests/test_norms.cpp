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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"

namespace orlicz {
namespace {

using testing::diag;
using testing::error_code;
using testing::Gen;

double sum_power(const SpectralProfile& x, double p) {
  double a = 0.0;
  for (const auto& s : x.steps()) a += std::pow(s.value, p) * s.width;
  return a;
}

// Oracle for c u^p: Luxemburg norm is (c A)^{1/p}.
double power_luxemburg(const SpectralProfile& x, double p, double c) { return std::pow(c * sum_power(x, p), 1.0 / p); }

// Oracle for c u^p: minimizing (1 + c k^p A) / k gives p/(p-1) ((p-1) c A)^{1/p}.
double power_orlicz(const SpectralProfile& x, double p, double c) {
  return p / (p - 1.0) * std::pow((p - 1.0) * c * sum_power(x, p), 1.0 / p);
}

// Plain bisection on modular(x / l) = 1 with fixed iteration count.
double luxemburg_by_bisection(const OrliczFunction& f, const SpectralProfile& x) {
  double lo = 1e-12;
  double hi = 1e12;
  for (int i = 0; i < 400; ++i) {
    const double mid = std::sqrt(lo * hi);
    double m = 0.0;
    for (const auto& s : x.steps()) m += f(s.value / mid) * s.width;
    (m <= 1.0 ? hi : lo) = mid;
  }
  return hi;
}

const std::vector<const char*> kFunctions = {"power:p=2", "power:p=3", "power:p=1.5,c=2", "exp", "pwl:0:1,1:1:2",
                                             "legendre(exp)"};

TEST(Modular, Examples) {
  EXPECT_DOUBLE_EQ(modular(OrliczFunction::power(2.0), diag({3.0, 4.0})), 25.0);
  EXPECT_DOUBLE_EQ(modular(OrliczFunction::power(2.0), SpectralProfile{}), 0.0);
  EXPECT_NEAR(modular(OrliczFunction::exp_minus_linear(), diag({1.0}, {2.0})), 2.0 * (std::exp(1.0) - 2.0), 1e-15);
}

TEST(Luxemburg, DiagonalSquareIsEuclidean) {
  const auto r = luxemburg_norm(OrliczFunction::power(2.0), diag({3.0, 4.0}));
  EXPECT_NEAR(r.value, 5.0, 1e-10);
  EXPECT_EQ(r.method, NormMethod::closed_form);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Luxemburg, ZeroElement) {
  const auto r = luxemburg_norm(OrliczFunction::exp_minus_linear(), SpectralProfile{});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(orlicz_norm(OrliczFunction::exp_minus_linear(), SpectralProfile{}).value, 0.0);
}

TEST(Luxemburg, PowerFormulaOnRandomProfiles) {
  Gen g(31);
  for (int i = 0; i < 300; ++i) {
    const double p = g.uniform(1.1, 5.0);
    const double c = g.uniform(0.2, 3.0);
    const auto x = g.profile(6);
    EXPECT_NEAR(luxemburg_norm(OrliczFunction::power(p, c), x).value, power_luxemburg(x, p, c),
                1e-12 * power_luxemburg(x, p, c));
  }
}

TEST(Luxemburg, PowerAvoidsOverflow) {
  const SpectralProfile x({{1e200, 1.0}});
  EXPECT_NEAR(luxemburg_norm(OrliczFunction::power(3.0), x).value / 1e200, 1.0, 1e-14);
}

TEST(Luxemburg, BisectionMatchesIndependentOracle) {
  Gen g(32);
  for (const char* s : {"exp", "pwl:0:1,1:1:2", "legendre(exp)"}) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 100; ++i) {
      const auto x = g.profile(5).scaled(g.uniform(0.01, 20.0));
      const auto r = luxemburg_norm(f, x, 1e-10);
      EXPECT_EQ(r.method, NormMethod::bisection);
      EXPECT_GT(r.iterations, 0);
      EXPECT_LE(r.residual, 1e-10);
      const double oracle = luxemburg_by_bisection(f, x);
      EXPECT_NEAR(r.value, oracle, 2e-10 * oracle) << s;
      EXPECT_LE(modular(f, x.scaled(1.0 / r.value)), 1.0 + 1e-12);
    }
  }
}

TEST(Luxemburg, RejectsBadTolerance) {
  const auto f = OrliczFunction::exp_minus_linear();
  const auto x = diag({1.0});
  EXPECT_EQ(error_code([&] { luxemburg_norm(f, x, 0.0); }), Errc::domain);
  EXPECT_EQ(error_code([&] { luxemburg_norm(f, x, -1.0); }), Errc::domain);
  EXPECT_EQ(error_code([&] { orlicz_norm(f, x, std::nan("")); }), Errc::domain);
}

TEST(OrliczNorm, DiagonalSquareIsTen) {
  const auto r = orlicz_norm(OrliczFunction::power(2.0), diag({3.0, 4.0}));
  EXPECT_NEAR(r.value, 10.0, 1e-7);
  EXPECT_EQ(r.method, NormMethod::amemiya_minimization);
  EXPECT_GT(r.iterations, 0);
}

TEST(OrliczNorm, PowerFormulaOnRandomProfiles) {
  Gen g(33);
  for (int i = 0; i < 200; ++i) {
    const double p = g.uniform(1.2, 4.0);
    const double c = g.uniform(0.2, 3.0);
    const auto x = g.profile(6);
    const double oracle = power_orlicz(x, p, c);
    EXPECT_NEAR(orlicz_norm(OrliczFunction::power(p, c), x).value, oracle, 1e-7 * oracle) << p;
  }
}

TEST(OrliczNorm, AgreesWithDualBruteForce) {
  Gen g(34);
  for (const char* s : kFunctions) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 30; ++i) {
      const auto x = g.profile(4);
      const double amemiya = orlicz_norm(f, x).value;
      const double dual = orlicz_norm_dual_bruteforce(f, x);
      EXPECT_NEAR(dual, amemiya, 1e-4 * amemiya) << s;
    }
  }
}

TEST(OrliczNorm, DualBruteForceLimits) {
  const auto f = OrliczFunction::power(2.0);
  const SpectralProfile five({{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}});
  EXPECT_EQ(error_code([&] { orlicz_norm_dual_bruteforce(f, five); }), Errc::validation);
  EXPECT_EQ(error_code([&] { orlicz_norm_dual_bruteforce(f, five.head(2), 0); }), Errc::domain);
  Matrix m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  EXPECT_EQ(error_code([&] { orlicz_norm_dual_bruteforce(f, testing::single_block(m)); }), Errc::validation);
  EXPECT_NEAR(orlicz_norm_dual_bruteforce(f, diag({3.0, 4.0})), 10.0, 1e-6);
}

TEST(Norms, SandwichAndHomogeneity) {
  Gen g(35);
  for (const char* s : kFunctions) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 60; ++i) {
      const auto x = g.profile(6).scaled(g.uniform(0.05, 10.0));
      const double lux = luxemburg_norm(f, x).value;
      const double orl = orlicz_norm(f, x).value;
      EXPECT_LE(lux, orl * (1 + 1e-8)) << s;
      EXPECT_LE(orl, 2.0 * lux * (1 + 1e-8)) << s;
      const double a = g.uniform(0.1, 5.0);
      EXPECT_NEAR(luxemburg_norm(f, x.scaled(a)).value, a * lux, 1e-7 * a * lux) << s;
      EXPECT_NEAR(orlicz_norm(f, x.scaled(a)).value, a * orl, 1e-7 * a * orl) << s;
    }
  }
}

TEST(Norms, TriangleInequalityOnElements) {
  Gen g(36);
  for (const char* s : kFunctions) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 40; ++i) {
      const auto a = g.algebra();
      const auto x = g.element(a);
      const auto y = g.element(a);
      EXPECT_LE(luxemburg_norm(f, x + y).value,
                (luxemburg_norm(f, x).value + luxemburg_norm(f, y).value) * (1 + 1e-7))
          << s;
      EXPECT_LE(orlicz_norm(f, x + y).value, (orlicz_norm(f, x).value + orlicz_norm(f, y).value) * (1 + 1e-7)) << s;
    }
  }
}

TEST(Norms, UnitBallMatchesModular) {
  Gen g(37);
  for (const char* s : kFunctions) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 60; ++i) {
      const auto x = g.profile(5).scaled(g.uniform(0.05, 5.0));
      const double lux = luxemburg_norm(f, x).value;
      const double m = modular(f, x);
      if (std::abs(lux - 1.0) < 1e-6) continue;
      EXPECT_EQ(lux <= 1.0, m <= 1.0) << s;
    }
  }
}

TEST(Membership, FiniteProfilesAreInBothSpaces) {
  const auto m = membership(OrliczFunction::exp_minus_linear(), diag({3.0, 4.0}));
  EXPECT_TRUE(m.in_L_phi);
  EXPECT_TRUE(m.in_E_phi);
  EXPECT_FALSE(m.reason.empty());
}

TEST(DistanceToE, TailsOfProfileSatisfyBounds) {
  const auto f = OrliczFunction::power(2.0);
  const SpectralProfile x({{10.0, 0.1}, {1.0, 1.0}});
  EXPECT_EQ(truncation_levels(x), (std::vector<double>{0.0, 0.5, 1.0, 5.5, 10.0}));
  const auto r = distance_to_E_check(f, x);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.tails.size(), 5u);
  // Above level 1 only (10, 0.1) remains.
  const auto& t = r.tails[2];
  EXPECT_DOUBLE_EQ(t.level, 1.0);
  EXPECT_NEAR(t.luxemburg, std::sqrt(10.0), 1e-12);
  EXPECT_NEAR(t.orlicz, 2.0 * std::sqrt(10.0), 1e-7);
  EXPECT_DOUBLE_EQ(t.modular_bound, 11.0);
  EXPECT_EQ(r.tails.back().luxemburg, 0.0);
  EXPECT_EQ(r.distance_luxemburg, 0.0);
}

TEST(DistanceToE, ElementMatchesProfilePath) {
  Gen g(38);
  const auto f = OrliczFunction::exp_minus_linear();
  for (int i = 0; i < 20; ++i) {
    const auto x = g.element(g.algebra());
    const auto a = distance_to_E_check(f, x);
    const auto b = distance_to_E_check(f, profile_of(x));
    EXPECT_TRUE(a.pass);
    ASSERT_EQ(a.tails.size(), b.tails.size());
    for (std::size_t k = 0; k < a.tails.size(); ++k) {
      EXPECT_NEAR(a.tails[k].luxemburg, b.tails[k].luxemburg, 1e-7 * std::max(1.0, b.tails[k].luxemburg));
    }
  }
}

TEST(ScaleForModular, HitsTarget) {
  Gen g(39);
  for (const char* s : kFunctions) {
    const auto f = OrliczFunction::parse(s);
    for (int i = 0; i < 40; ++i) {
      const auto x = g.profile(5);
      const double target = g.uniform(0.01, 30.0);
      const double l = scale_for_modular(f, x, target);
      EXPECT_NEAR(modular(f, x.scaled(l)), target, 1e-9 * target) << s;
    }
  }
  EXPECT_EQ(error_code([] { scale_for_modular(OrliczFunction::power(2.0), SpectralProfile{}, 1.0); }), Errc::domain);
  EXPECT_EQ(error_code([] { scale_for_modular(OrliczFunction::power(2.0), SpectralProfile({{1, 1}}), 0.0); }),
            Errc::domain);
}

TEST(NormMethod, Names) {
  EXPECT_STREQ(to_string(NormMethod::closed_form), "closed_form");
  EXPECT_STREQ(to_string(NormMethod::bisection), "bisection");
  EXPECT_STREQ(to_string(NormMethod::amemiya_minimization), "amemiya_minimization");
  EXPECT_STREQ(to_string(NormMethod::dual_bruteforce), "dual_bruteforce");
}

}  // namespace
}  // namespace orlicz
