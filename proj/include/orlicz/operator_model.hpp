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

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace orlicz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tolerances of the finite operator model.
inline constexpr double kHermitianTol = 1e-9;     // relative to max(1, max |entry|)
inline constexpr double kNegativeClamp = 1e-10;   // eigenvalues in [-this, 0) are clamped to 0
inline constexpr double kSpectralTie = 1e-12;     // eigenvalues within this of the cut count as <= cut

struct BlockSpec {
  int dim = 1;
  double weight = 1.0;

  bool operator==(const BlockSpec&) const = default;
};

/// Finite direct sum of matrix blocks M_{d_1} + ... + M_{d_m} with the trace
/// tau(x) = sum_b weight_b * Tr(x_b).
class TracialAlgebra {
 public:
  explicit TracialAlgebra(std::vector<BlockSpec> blocks);

  const std::vector<BlockSpec>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// tau(1) = sum_b weight_b * dim_b.
  double identity_trace() const noexcept;

  bool operator==(const TracialAlgebra&) const = default;

 private:
  std::vector<BlockSpec> blocks_;
};

/// An element of a TracialAlgebra: one complex matrix per block, all finite.
class MatrixElement {
 public:
  MatrixElement(TracialAlgebra algebra, std::vector<Matrix> blocks);

  static MatrixElement zero(const TracialAlgebra& algebra);
  static MatrixElement identity(const TracialAlgebra& algebra);
  /// Diagonal element; `entries` runs over the diagonals of all blocks in order.
  static MatrixElement diagonal(const TracialAlgebra& algebra, std::span<const double> entries);

  const TracialAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(std::size_t b) const { return blocks_.at(b); }

  MatrixElement adjoint() const;
  bool is_hermitian(double tol = kHermitianTol) const;
  /// max over blocks of the largest entry modulus.
  double max_abs() const;
  /// Largest singular value over all blocks.
  double operator_norm() const;

  MatrixElement operator+(const MatrixElement& other) const;
  MatrixElement operator-(const MatrixElement& other) const;
  MatrixElement operator-() const;
  /// Blockwise product.
  MatrixElement operator*(const MatrixElement& other) const;
  MatrixElement operator*(Complex scalar) const;
  friend MatrixElement operator*(Complex scalar, const MatrixElement& x) { return x * scalar; }

 private:
  void require_same_algebra(const MatrixElement& other, const char* op) const;

  TracialAlgebra algebra_;
  std::vector<Matrix> blocks_;
};

/// Largest blockwise Frobenius norm of x - y.
double max_block_distance(const MatrixElement& x, const MatrixElement& y);

/// Raw block data as nested rows, e.g. from JSON.
using RawBlock = std::vector<std::vector<Complex>>;

MatrixElement load_element(const TracialAlgebra& algebra, const std::vector<RawBlock>& raw);

Complex trace(const MatrixElement& x);

/// x = u |x| with u the partial isometry that vanishes on ker |x|.
struct PolarParts {
  MatrixElement isometry_part;
  MatrixElement positive_part;
};

PolarParts polar(const MatrixElement& x);

/// Eigenvalues of a Hermitian positive element, per block, ascending, with
/// small negatives clamped. Fails on non-Hermitian input or on eigenvalues
/// below -kNegativeClamp.
std::vector<Eigen::VectorXd> positive_spectrum(const MatrixElement& h);

/// Singular values of each block (descending).
std::vector<Eigen::VectorXd> singular_values(const MatrixElement& x);

/// e_{(s, inf)}(h): projection onto eigenvectors of h with eigenvalue > s.
MatrixElement spectral_projection(const MatrixElement& h, double s);

/// g(h) by functional calculus in the eigenbasis of h.
MatrixElement apply_scalar_function(const std::function<double(double)>& g, const MatrixElement& h);

/// x_n = u g_n(|x|) with g_n(l) = l for l <= n and 0 above.
MatrixElement truncate(const MatrixElement& x, double n);

/// true when h is Hermitian and its spectrum is >= -kNegativeClamp.
bool is_positive(const MatrixElement& h);

}  // namespace orlicz
