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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace railswap {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. All entries must be finite; construction
/// validates this. Instances are treated as immutable values by every
/// operation in the library (operations return new matrices), so shared
/// concurrent reads are safe.
///
/// 0x0 matrices are permitted: they arise as vacuum submatrices in the
/// multi-photon amplitude kernel and have permanent 1 by convention.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Matrix from row-major entries; throws Error if the entry count does not
  /// match the shape or any entry is non-finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const noexcept { return data_; }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  /// Shape as "RxC", used in diagnostics.
  std::string shape_string() const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Standard matrix product. Throws Error naming both shapes when the inner
/// dimensions disagree.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

/// Scale every entry by a scalar.
ComplexMatrix scale(const Complex& c, const ComplexMatrix& m);

/// Largest entrywise absolute difference. Throws Error on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff max-norm of (u^dagger u - I) is below tol. Throws Error for
/// non-square input or non-positive tol.
bool is_unitary(const ComplexMatrix& u, double tol);

/// True iff a unit-magnitude scalar c exists with max|a - c*b| < tol. The
/// candidate c is fixed from the largest-magnitude entry of b, so an all-zero
/// b matches only an all-zero a. Throws Error on shape mismatch.
bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace railswap
