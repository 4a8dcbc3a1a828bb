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

#include "orlicz/sampling.hpp"

#include <cmath>

#include "orlicz/error.hpp"

namespace orlicz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Streams used inside one sample.
constexpr std::uint64_t kAlgebraStream = 0x0a16;

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t stream) {
  return splitmix64(splitmix64(splitmix64(master) ^ index) ^ stream);
}

std::mt19937_64 Sampler::engine(std::uint64_t index, std::uint64_t stream) const {
  return std::mt19937_64(derive_seed(config_.seed, index, stream));
}

TracialAlgebra Sampler::algebra(std::uint64_t index) const {
  if (config_.min_blocks < 1 || config_.max_blocks < config_.min_blocks || config_.max_dim < 1) {
    fail(Errc::domain, "sampler: invalid block/dimension ranges");
  }
  auto rng = engine(index, kAlgebraStream);
  std::uniform_int_distribution<int> nblocks(config_.min_blocks, config_.max_blocks);
  std::uniform_int_distribution<int> dim(1, config_.max_dim);
  std::uniform_real_distribution<double> weight(config_.min_weight, config_.max_weight);
  std::vector<BlockSpec> blocks(static_cast<std::size_t>(nblocks(rng)));
  for (auto& b : blocks) {
    b.dim = dim(rng);
    b.weight = weight(rng);
  }
  return TracialAlgebra(std::move(blocks));
}

MatrixElement Sampler::element(const TracialAlgebra& algebra, std::uint64_t index, std::uint64_t stream,
                               bool positive) const {
  auto rng = engine(index, stream + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) {
    Matrix m(b.dim, b.dim);
    for (int j = 0; j < b.dim; ++j) {
      for (int i = 0; i < b.dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        m(i, j) = Complex(re, im);
      }
    }
    if (positive) m = (m.adjoint() * m).eval();
    blocks.push_back(std::move(m));
  }
  if (positive) {
    // Exact Hermitian symmetry.
    for (auto& m : blocks) m = (0.5 * (m + m.adjoint())).eval();
  }
  return {algebra, std::move(blocks)};
}

MatrixElement Sampler::element(std::uint64_t index, bool positive) const {
  return element(algebra(index), index, 0, positive);
}

std::pair<MatrixElement, MatrixElement> Sampler::pair(std::uint64_t index, bool positive) const {
  const TracialAlgebra a = algebra(index);
  return {element(a, index, 0, positive), element(a, index, 1, positive)};
}

MatrixElement Sampler::unitary(const TracialAlgebra& algebra, std::uint64_t index, std::uint64_t stream) const {
  const MatrixElement g = element(algebra, index, stream + 1000, false);
  std::vector<Matrix> blocks;
  for (const auto& m : g.blocks()) {
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      const Complex d = r(i, i);
      const double a = std::abs(d);
      if (a > 0.0) q.col(i) *= d / a;
    }
    blocks.push_back(std::move(q));
  }
  return {algebra, std::move(blocks)};
}

double Sampler::uniform(std::uint64_t index, std::uint64_t stream, double lo, double hi) const {
  auto rng = engine(index, stream + 5000);
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace orlicz
