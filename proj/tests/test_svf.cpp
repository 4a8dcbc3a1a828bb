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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "test_support.hpp"

namespace orlicz {
namespace {

using testing::diag;
using testing::error_code;
using testing::Gen;
using testing::single_block;

// Oracle: eigenvalues of x* x per block, weighted, sorted descending.
std::vector<std::pair<double, double>> weighted_singular_values(const MatrixElement& x) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const Matrix g = x.block(b).adjoint() * x.block(b);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
      out.push_back({std::sqrt(std::max(0.0, eig.eigenvalues()(i))), x.algebra().blocks()[b].weight});
    }
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.first > b.first; });
  return out;
}

// mu_t from the oracle list.
double mu_oracle(const std::vector<std::pair<double, double>>& sv, double t) {
  double left = 0.0;
  for (const auto& [v, w] : sv) {
    if (t < left + w) return v;
    left += w;
  }
  return 0.0;
}

TEST(SpectralProfile, DiagonalExample) {
  const auto p = profile_of(diag({3.0, 4.0}));
  EXPECT_EQ(p.steps(), (std::vector<Step>{{4.0, 1.0}, {3.0, 1.0}}));
  EXPECT_DOUBLE_EQ(p.total_width(), 2.0);
  EXPECT_DOUBLE_EQ(p.max_value(), 4.0);
}

TEST(SpectralProfile, CoalescesEqualValuesAndDropsZeros) {
  const auto p = profile_of(diag({2.0, 0.0, -2.0, 1.0}, {0.5, 3.0, 0.25, 1.0}));
  EXPECT_EQ(p.steps(), (std::vector<Step>{{2.0, 0.75}, {1.0, 1.0}}));
  EXPECT_TRUE(profile_of(MatrixElement::zero(TracialAlgebra({{3, 1.0}}))).empty());
}

TEST(SpectralProfile, Validation) {
  EXPECT_EQ(error_code([] { SpectralProfile({{1.0, 1.0}, {1.0, 1.0}}); }), Errc::validation);
  EXPECT_EQ(error_code([] { SpectralProfile({{1.0, 1.0}, {2.0, 1.0}}); }), Errc::validation);
  EXPECT_EQ(error_code([] { SpectralProfile({{-1.0, 1.0}}); }), Errc::validation);
  EXPECT_EQ(error_code([] { SpectralProfile({{1.0, 0.0}}); }), Errc::validation);
  EXPECT_EQ(error_code([] { SpectralProfile({{std::nan(""), 1.0}}); }), Errc::validation);
  EXPECT_EQ(error_code([] { SpectralProfile({{1.0, INFINITY}}); }), Errc::validation);
}

TEST(SpectralProfile, MuIsRightContinuous) {
  const SpectralProfile p({{4.0, 1.0}, {3.0, 1.0}});
  EXPECT_DOUBLE_EQ(mu_at(p, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(mu_at(p, std::nextafter(1.0, 0.0)), 4.0);
  EXPECT_DOUBLE_EQ(mu_at(p, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(mu_at(p, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(mu_at(p, 1e9), 0.0);
  EXPECT_EQ(error_code([&] { mu_at(p, -1.0); }), Errc::domain);
}

TEST(SpectralProfile, DistributionUsesStrictInequality) {
  const SpectralProfile p({{4.0, 1.0}, {3.0, 2.0}});
  EXPECT_DOUBLE_EQ(distribution_at(p, 3.0), 1.0);
  EXPECT_DOUBLE_EQ(distribution_at(p, std::nextafter(3.0, 0.0)), 3.0);
  EXPECT_DOUBLE_EQ(distribution_at(p, 4.0), 0.0);
  EXPECT_DOUBLE_EQ(distribution_at(p, 0.0), 3.0);
  EXPECT_EQ(error_code([&] { distribution_at(p, -0.5); }), Errc::domain);
}

TEST(SpectralProfile, ScaledHeadTail) {
  const SpectralProfile p({{4.0, 1.0}, {3.0, 2.0}, {1.0, 0.5}});
  EXPECT_EQ(p.scaled(-2.0).steps(), (std::vector<Step>{{8.0, 1.0}, {6.0, 2.0}, {2.0, 0.5}}));
  EXPECT_TRUE(p.scaled(0.0).empty());
  EXPECT_EQ(p.head(3.0).steps(), (std::vector<Step>{{3.0, 2.0}, {1.0, 0.5}}));
  EXPECT_EQ(p.tail(3.0).steps(), (std::vector<Step>{{4.0, 1.0}}));
  EXPECT_TRUE(p.tail(4.0).empty());
  EXPECT_EQ(breakpoints(p), (std::vector<double>{0.0, 1.0, 3.0, 3.5}));
}

TEST(SpectralProfile, IntegrateMatchesElementTrace) {
  const auto f = OrliczFunction::power(2.0);
  const auto x = diag({3.0, 1.0}, {0.5, 2.0});
  EXPECT_DOUBLE_EQ(integrate_phi_profile(f, profile_of(x)), 9.0 * 0.5 + 2.0);
  EXPECT_DOUBLE_EQ(integrate_phi_profile(f, SpectralProfile{}), 0.0);
}

TEST(SpectralProfile, MatchesEigenvalueOracle) {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto x = g.element(g.algebra());
    const auto p = profile_of(x);
    const auto oracle = weighted_singular_values(x);
    double total = 0.0;
    for (const auto& [v, w] : oracle) total += w;
    EXPECT_NEAR(p.total_width(), total, 1e-9);
    for (int k = 0; k < 50; ++k) {
      const double t = g.uniform(0.0, total);
      // Skip points too close to a jump where the two orderings may disagree.
      double acc = 0.0;
      bool near_jump = false;
      for (const auto& [v, w] : oracle) {
        acc += w;
        near_jump = near_jump || std::abs(acc - t) < 1e-9;
      }
      if (near_jump) continue;
      EXPECT_NEAR(mu_at(p, t), mu_oracle(oracle, t), 1e-9 * std::max(1.0, p.max_value()));
    }
  }
}

TEST(SpectralProfile, UnitaryInvariance) {
  Gen g(22);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.algebra();
    const auto x = g.element(a);
    const auto u = g.unitary(a);
    const auto v = g.unitary(a);
    const auto p = profile_of(x);
    const auto q = profile_of(u * x * v);
    ASSERT_EQ(p.size(), q.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      EXPECT_NEAR(p.steps()[k].value, q.steps()[k].value, 1e-10 * std::max(1.0, p.max_value()));
      EXPECT_NEAR(p.steps()[k].width, q.steps()[k].width, 1e-12);
    }
    EXPECT_EQ(profile_of(x.adjoint()).size(), p.size());
  }
}

TEST(Submajorization, HoldsOnRandomPairs) {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.algebra();
    const auto x = g.element(a);
    const auto y = g.element(a);
    std::vector<double> grid;
    const double total = a.identity_trace();
    for (int k = 0; k < 64; ++k) grid.push_back(total * k / 64.0);
    const auto r = check_submajorization(x, y, grid);
    EXPECT_TRUE(r.pass) << r.max_violation << " at t=" << r.witness_t;
  }
}

TEST(Submajorization, DisjointSupportsAndAlgebraMismatch) {
  // mu(x+y) = 1 on [0,2); mu_{t/2}(x) = 1 on [0,2) too, so the slack is exactly 0 or less.
  const auto x = diag({1.0, 0.0});
  const auto y = diag({0.0, 1.0});
  const std::vector<double> grid = {0.0, 0.5, 1.0, 1.5};
  const auto r = check_submajorization(x, y, grid);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_violation, 0.0);
  EXPECT_EQ(error_code([&] { check_submajorization(x, diag({1.0, 2.0, 3.0}), grid); }), Errc::shape);
}

TEST(SpectralProfile, RotationLikeProfile) {
  Matrix m(2, 2);
  m << 0.0, -2.0, 1.0, 0.0;
  const auto p = profile_of(single_block(m));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_NEAR(p.steps()[0].value, 2.0, 1e-14);
  EXPECT_NEAR(p.steps()[1].value, 1.0, 1e-14);
}

}  // namespace
}  // namespace orlicz
