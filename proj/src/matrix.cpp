// Copyright 2026 The railswap developers
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

#include "railswap/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "railswap/error.hpp"

namespace railswap {

namespace {

void check_finite(const std::vector<Complex>& entries, std::size_t cols) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag())) {
      const std::size_t r = cols == 0 ? 0 : k / cols;
      const std::size_t c = cols == 0 ? 0 : k % cols;
      throw Error("ComplexMatrix: non-finite entry at (" + std::to_string(r) + "," +
                  std::to_string(c) + ")");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error("ComplexMatrix: " + std::to_string(data_.size()) + " entries for shape " +
                shape_string());
  }
  check_finite(data_, cols_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("ComplexMatrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

std::string ComplexMatrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error("matmul: dimension mismatch (" + a.shape_string() + " vs " + b.shape_string() +
                ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix scale(const Complex& c, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) out(r, k) = c * m(r, k);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("max_abs_diff: shape mismatch (" + a.shape_string() + " vs " + b.shape_string() +
                ")");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) throw Error("is_unitary: matrix is " + u.shape_string() + ", not square");
  if (!(tol > 0.0)) throw Error("is_unitary: tolerance must be positive");
  const ComplexMatrix gram = matmul(u.adjoint(), u);
  return max_abs_diff(gram, ComplexMatrix::identity(u.rows())) < tol;
}

bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("equal_up_to_global_phase: shape mismatch (" + a.shape_string() + " vs " +
                b.shape_string() + ")");
  }
  // Fix the phase candidate from the largest-magnitude entry of b.
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      const double mag = std::abs(b(r, c));
      if (mag > best) {
        best = mag;
        br = r;
        bc = c;
      }
    }
  }
  Complex phase(1.0, 0.0);
  if (best > 0.0) {
    const Complex ratio = a(br, bc) * std::conj(b(br, bc));
    const double mag = std::abs(ratio);
    if (mag > 0.0) phase = ratio / mag;
  }
  return max_abs_diff(a, scale(phase, b)) < tol;
}

}  // namespace railswap
