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

#include <cstdint>
#include <random>
#include <utility>

#include "orlicz/operator_model.hpp"

namespace orlicz {

/// Counter-based seed derivation: sample `index` of stream `stream` always
/// gets the same generator, whatever order samples are drawn in.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t stream = 0);

struct SamplerConfig {
  std::uint64_t seed = 0;
  int min_blocks = 2;
  int max_blocks = 6;
  int max_dim = 8;
  double min_weight = 0.25;
  double max_weight = 4.0;
};

/// Seeded random algebras and elements: Gaussian complex entries per block,
/// positive elements as h* h.
class Sampler {
 public:
  explicit Sampler(SamplerConfig config = {}) : config_(config) {}

  const SamplerConfig& config() const noexcept { return config_; }

  TracialAlgebra algebra(std::uint64_t index) const;
  MatrixElement element(const TracialAlgebra& algebra, std::uint64_t index, std::uint64_t stream,
                        bool positive = false) const;
  /// An element of algebra(index).
  MatrixElement element(std::uint64_t index, bool positive = false) const;
  /// Two independent elements of algebra(index).
  std::pair<MatrixElement, MatrixElement> pair(std::uint64_t index, bool positive = false) const;
  /// Haar-distributed unitary per block.
  MatrixElement unitary(const TracialAlgebra& algebra, std::uint64_t index, std::uint64_t stream) const;
  /// Uniform real in [lo, hi) for sample `index`, stream `stream`.
  double uniform(std::uint64_t index, std::uint64_t stream, double lo, double hi) const;

 private:
  std::mt19937_64 engine(std::uint64_t index, std::uint64_t stream) const;

  SamplerConfig config_;
};

}  // namespace orlicz
