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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "orlicz/error.hpp"
#include "orlicz/operator_model.hpp"
#include "orlicz/svf.hpp"

namespace orlicz::testing {

// Small seeded generator for property tests, independent of the library
// sampler so the two cannot hide each other's mistakes.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  double normal() {
    const double u1 = uniform(1e-300, 1.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  TracialAlgebra algebra(int max_blocks = 4, int max_dim = 4) {
    std::vector<BlockSpec> blocks(static_cast<std::size_t>(integer(1, max_blocks)));
    for (auto& b : blocks) b = {integer(1, max_dim), uniform(0.25, 3.0)};
    return TracialAlgebra(std::move(blocks));
  }

  MatrixElement element(const TracialAlgebra& a, bool positive = false) {
    std::vector<Matrix> blocks;
    for (const auto& b : a.blocks()) {
      Matrix m(b.dim, b.dim);
      for (int i = 0; i < b.dim; ++i) {
        for (int j = 0; j < b.dim; ++j) m(i, j) = Complex(normal(), normal());
      }
      if (positive) {
        m = (m.adjoint() * m).eval();
        m = (0.5 * (m + m.adjoint())).eval();
      }
      blocks.push_back(m / static_cast<double>(b.dim));
    }
    return {a, std::move(blocks)};
  }

  MatrixElement unitary(const TracialAlgebra& a) {
    std::vector<Matrix> blocks;
    const MatrixElement g = element(a);
    for (const auto& m : g.blocks()) {
      Eigen::HouseholderQR<Matrix> qr(m);
      blocks.push_back(qr.householderQ());
    }
    return {a, std::move(blocks)};
  }

  SpectralProfile profile(int max_steps) {
    const int n = integer(1, max_steps);
    std::vector<double> values;
    for (int i = 0; i < n; ++i) values.push_back(uniform(0.05, 3.0));
    std::sort(values.rbegin(), values.rend());
    std::vector<Step> steps;
    for (double v : values) {
      if (!steps.empty() && steps.back().value - v < 1e-3) continue;
      steps.push_back({v, uniform(0.1, 2.0)});
    }
    return SpectralProfile(std::move(steps));
  }

 private:
  std::uint64_t state_;
};

inline MatrixElement diag(std::vector<double> entries, std::vector<double> weights = {}) {
  if (weights.empty()) {
    return MatrixElement::diagonal(TracialAlgebra({{static_cast<int>(entries.size()), 1.0}}), entries);
  }
  std::vector<BlockSpec> blocks;
  for (double w : weights) blocks.push_back({1, w});
  return MatrixElement::diagonal(TracialAlgebra(blocks), entries);
}

inline MatrixElement single_block(const Matrix& m) {
  return {TracialAlgebra({{static_cast<int>(m.rows()), 1.0}}), {m}};
}

inline Errc error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected orlicz::Error";
  return Errc::numeric;
}

}  // namespace orlicz::testing
