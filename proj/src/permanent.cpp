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

#include "railswap/permanent.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "railswap/error.hpp"

namespace railswap {

std::size_t permanent_size_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("RAILSWAP_PERMANENT_CAP")) {
      char* end = nullptr;
      const unsigned long parsed = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && parsed >= 1 && parsed <= 62) {
        return static_cast<std::size_t>(parsed);
      }
    }
    return kDefaultPermanentSizeCap;
  }();
  return cap;
}

Complex permanent(const ComplexMatrix& a, std::size_t size_cap) {
  if (!a.is_square()) {
    throw Error("permanent: matrix is " + a.shape_string() + ", not square");
  }
  const std::size_t n = a.rows();
  if (n > size_cap) {
    throw Error("permanent: matrix size " + std::to_string(n) + " exceeds cap " +
                std::to_string(size_cap));
  }
  if (n == 0) return Complex(1.0, 0.0);

  // Ryser: perm(A) = (-1)^n sum_{S != {}} (-1)^|S| prod_i sum_{j in S} a_ij.
  // Consecutive subsets in Gray-code order differ by one column, so each
  // step updates the row sums in O(n).
  std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
  Complex total(0.0, 0.0);
  std::uint64_t prev_gray = 0;
  int subset_size = 0;
  const std::uint64_t subset_count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subset_count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(changed));
    if (gray & changed) {
      for (std::size_t r = 0; r < n; ++r) row_sums[r] += a(r, col);
      ++subset_size;
    } else {
      for (std::size_t r = 0; r < n; ++r) row_sums[r] -= a(r, col);
      --subset_size;
    }
    Complex prod(1.0, 0.0);
    for (std::size_t r = 0; r < n; ++r) prod *= row_sums[r];
    total += (subset_size % 2 == 0) ? prod : -prod;
    prev_gray = gray;
  }
  return (n % 2 == 0) ? total : -total;
}

}  // namespace railswap
