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

#include "orlicz/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "orlicz/error.hpp"
#include "orlicz/numeric_format.hpp"

namespace orlicz {

namespace {

using Svd = Eigen::JacobiSVD<Matrix>;
using Eig = Eigen::SelfAdjointEigenSolver<Matrix>;

Svd block_svd(const Matrix& m, std::size_t b) {
  Svd svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) fail(Errc::numeric, "SVD did not converge in block " + std::to_string(b));
  return svd;
}

// Singular values at or below this are treated as exact zeros.
double rank_threshold(const Eigen::VectorXd& sigma, Eigen::Index dim) {
  const double smax = sigma.size() > 0 ? sigma.maxCoeff() : 0.0;
  return smax * static_cast<double>(dim) * 4.0 * std::numeric_limits<double>::epsilon();
}

double max_abs_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_hermitian(const MatrixElement& h, const char* op) {
  if (!h.is_hermitian()) fail(Errc::validation, std::string(op) + ": input is not Hermitian");
}

// Eigen-decomposition of each block of a Hermitian positive element, with
// the small-negative clamp applied.
std::vector<Eig> positive_eigensystems(const MatrixElement& h, const char* op) {
  require_hermitian(h, op);
  std::vector<Eig> out;
  out.reserve(h.blocks().size());
  for (std::size_t b = 0; b < h.blocks().size(); ++b) {
    const Matrix& m = h.block(b);
    Eig eig(0.5 * (m + m.adjoint()));
    if (eig.info() != Eigen::Success) fail(Errc::numeric, std::string(op) + ": eigensolver failed in block " + std::to_string(b));
    const double lowest = eig.eigenvalues().minCoeff();
    if (lowest < -kNegativeClamp) {
      fail(Errc::validation, std::string(op) + ": eigenvalue " + format_real(lowest) + " in block " + std::to_string(b) +
                                 " is below -" + format_real(kNegativeClamp));
    }
    out.push_back(std::move(eig));
  }
  return out;
}

}  // namespace

TracialAlgebra::TracialAlgebra(std::vector<BlockSpec> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) fail(Errc::shape, "algebra needs at least one block");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].dim < 1) fail(Errc::shape, "block " + std::to_string(b) + ": dimension must be >= 1");
    if (!std::isfinite(blocks_[b].weight) || !(blocks_[b].weight > 0.0)) {
      fail(Errc::shape, "block " + std::to_string(b) + ": trace weight must be finite and > 0");
    }
  }
}

double TracialAlgebra::identity_trace() const noexcept {
  double t = 0.0;
  for (const auto& b : blocks_) t += b.weight * b.dim;
  return t;
}

MatrixElement::MatrixElement(TracialAlgebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  const auto& spec = algebra_.blocks();
  if (blocks_.size() != spec.size()) {
    fail(Errc::shape, "element has " + std::to_string(blocks_.size()) + " blocks, algebra has " + std::to_string(spec.size()));
  }
  for (std::size_t b = 0; b < spec.size(); ++b) {
    if (blocks_[b].rows() != spec[b].dim || blocks_[b].cols() != spec[b].dim) {
      fail(Errc::shape, "block " + std::to_string(b) + " is " + std::to_string(blocks_[b].rows()) + "x" +
                            std::to_string(blocks_[b].cols()) + ", expected " + std::to_string(spec[b].dim) + "x" +
                            std::to_string(spec[b].dim));
    }
    if (!blocks_[b].allFinite()) fail(Errc::non_finite, "block " + std::to_string(b) + " has a non-finite entry");
  }
}

MatrixElement MatrixElement::zero(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) blocks.push_back(Matrix::Zero(b.dim, b.dim));
  return {algebra, std::move(blocks)};
}

MatrixElement MatrixElement::identity(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) blocks.push_back(Matrix::Identity(b.dim, b.dim));
  return {algebra, std::move(blocks)};
}

MatrixElement MatrixElement::diagonal(const TracialAlgebra& algebra, std::span<const double> entries) {
  std::size_t total = 0;
  for (const auto& b : algebra.blocks()) total += static_cast<std::size_t>(b.dim);
  if (entries.size() != total) {
    fail(Errc::shape, "diagonal: got " + std::to_string(entries.size()) + " entries for total dimension " + std::to_string(total));
  }
  std::vector<Matrix> blocks;
  std::size_t pos = 0;
  for (const auto& b : algebra.blocks()) {
    Matrix m = Matrix::Zero(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i) m(i, i) = entries[pos++];
    blocks.push_back(std::move(m));
  }
  return {algebra, std::move(blocks)};
}

MatrixElement MatrixElement::adjoint() const {
  std::vector<Matrix> out;
  for (const auto& m : blocks_) out.push_back(m.adjoint());
  return {algebra_, std::move(out)};
}

bool MatrixElement::is_hermitian(double tol) const {
  for (const auto& m : blocks_) {
    const double scale = std::max(1.0, max_abs_entry(m));
    if (max_abs_entry(m - m.adjoint()) > tol * scale) return false;
  }
  return true;
}

double MatrixElement::max_abs() const {
  double v = 0.0;
  for (const auto& m : blocks_) v = std::max(v, max_abs_entry(m));
  return v;
}

double MatrixElement::operator_norm() const {
  double v = 0.0;
  for (const auto& s : singular_values(*this)) {
    if (s.size() > 0) v = std::max(v, s.maxCoeff());
  }
  return v;
}

void MatrixElement::require_same_algebra(const MatrixElement& other, const char* op) const {
  if (!(algebra_ == other.algebra_)) fail(Errc::shape, std::string(op) + ": elements belong to different algebras");
}

MatrixElement MatrixElement::operator+(const MatrixElement& other) const {
  require_same_algebra(other, "operator+");
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(blocks_[b] + other.blocks_[b]);
  return {algebra_, std::move(out)};
}

MatrixElement MatrixElement::operator-(const MatrixElement& other) const {
  require_same_algebra(other, "operator-");
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(blocks_[b] - other.blocks_[b]);
  return {algebra_, std::move(out)};
}

MatrixElement MatrixElement::operator-() const { return *this * Complex(-1.0); }

MatrixElement MatrixElement::operator*(const MatrixElement& other) const {
  require_same_algebra(other, "operator*");
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(blocks_[b] * other.blocks_[b]);
  return {algebra_, std::move(out)};
}

MatrixElement MatrixElement::operator*(Complex scalar) const {
  std::vector<Matrix> out;
  for (const auto& m : blocks_) out.push_back(m * scalar);
  return {algebra_, std::move(out)};
}

double max_block_distance(const MatrixElement& x, const MatrixElement& y) {
  const MatrixElement d = x - y;
  double v = 0.0;
  for (const auto& m : d.blocks()) v = std::max(v, m.norm());
  return v;
}

MatrixElement load_element(const TracialAlgebra& algebra, const std::vector<RawBlock>& raw) {
  const auto& spec = algebra.blocks();
  if (raw.size() != spec.size()) {
    fail(Errc::shape, "element has " + std::to_string(raw.size()) + " blocks, algebra has " + std::to_string(spec.size()));
  }
  std::vector<Matrix> blocks;
  for (std::size_t b = 0; b < raw.size(); ++b) {
    const int d = spec[b].dim;
    if (raw[b].size() != static_cast<std::size_t>(d)) {
      fail(Errc::shape, "block " + std::to_string(b) + " has " + std::to_string(raw[b].size()) + " rows, expected " + std::to_string(d));
    }
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
      if (raw[b][i].size() != static_cast<std::size_t>(d)) {
        fail(Errc::shape, "block " + std::to_string(b) + " row " + std::to_string(i) + " has " +
                              std::to_string(raw[b][i].size()) + " entries, expected " + std::to_string(d));
      }
      for (int j = 0; j < d; ++j) {
        const Complex z = raw[b][i][j];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
          fail(Errc::non_finite, "block " + std::to_string(b) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
        }
        m(i, j) = z;
      }
    }
    blocks.push_back(std::move(m));
  }
  return {algebra, std::move(blocks)};
}

Complex trace(const MatrixElement& x) {
  Complex t = 0.0;
  const auto& spec = x.algebra().blocks();
  for (std::size_t b = 0; b < spec.size(); ++b) t += spec[b].weight * x.block(b).trace();
  return t;
}

PolarParts polar(const MatrixElement& x) {
  std::vector<Matrix> iso;
  std::vector<Matrix> pos;
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const Matrix& m = x.block(b);
    const Svd svd = block_svd(m, b);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double thr = rank_threshold(sigma, m.rows());
    const Matrix& w = svd.matrixU();
    const Matrix& v = svd.matrixV();
    pos.push_back(v * sigma.cast<Complex>().asDiagonal() * v.adjoint());
    Matrix u = Matrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > thr) u += w.col(i) * v.col(i).adjoint();
    }
    iso.push_back(std::move(u));
  }
  return {MatrixElement(x.algebra(), std::move(iso)), MatrixElement(x.algebra(), std::move(pos))};
}

std::vector<Eigen::VectorXd> positive_spectrum(const MatrixElement& h) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& eig : positive_eigensystems(h, "positive_spectrum")) {
    out.push_back(eig.eigenvalues().cwiseMax(0.0));
  }
  return out;
}

std::vector<Eigen::VectorXd> singular_values(const MatrixElement& x) {
  std::vector<Eigen::VectorXd> out;
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    Eigen::JacobiSVD<Matrix> svd(x.block(b));
    if (svd.info() != Eigen::Success) fail(Errc::numeric, "SVD did not converge in block " + std::to_string(b));
    out.push_back(svd.singularValues());
  }
  return out;
}

MatrixElement spectral_projection(const MatrixElement& h, double s) {
  if (std::isnan(s) || s < 0.0) fail(Errc::domain, "spectral_projection: level s must be >= 0");
  const auto systems = positive_eigensystems(h, "spectral_projection");
  std::vector<Matrix> out;
  for (const auto& eig : systems) {
    const auto& vecs = eig.eigenvectors();
    Matrix p = Matrix::Zero(vecs.rows(), vecs.cols());
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
      if (eig.eigenvalues()(i) > s + kSpectralTie) p += vecs.col(i) * vecs.col(i).adjoint();
    }
    out.push_back(std::move(p));
  }
  return {h.algebra(), std::move(out)};
}

MatrixElement apply_scalar_function(const std::function<double(double)>& g, const MatrixElement& h) {
  const auto systems = positive_eigensystems(h, "apply_scalar_function");
  std::vector<Matrix> out;
  for (const auto& eig : systems) {
    Eigen::VectorXd mapped(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = g(std::max(0.0, eig.eigenvalues()(i)));
    const auto& vecs = eig.eigenvectors();
    out.push_back(vecs * mapped.cast<Complex>().asDiagonal() * vecs.adjoint());
  }
  return {h.algebra(), std::move(out)};
}

MatrixElement truncate(const MatrixElement& x, double n) {
  if (std::isnan(n) || n < 0.0) fail(Errc::domain, "truncate: level n must be >= 0");
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const Svd svd = block_svd(x.block(b), b);
    Eigen::VectorXd kept = svd.singularValues();
    for (Eigen::Index i = 0; i < kept.size(); ++i) {
      if (kept(i) > n + kSpectralTie) kept(i) = 0.0;
    }
    out.push_back(svd.matrixU() * kept.cast<Complex>().asDiagonal() * svd.matrixV().adjoint());
  }
  return {x.algebra(), std::move(out)};
}

bool is_positive(const MatrixElement& h) {
  if (!h.is_hermitian()) return false;
  for (const auto& m : h.blocks()) {
    Eig eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kNegativeClamp) return false;
  }
  return true;
}

}  // namespace orlicz
