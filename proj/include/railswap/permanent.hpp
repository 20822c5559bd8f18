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

#include <cstddef>

#include "railswap/matrix.hpp"

namespace railswap {

inline constexpr std::size_t kDefaultPermanentSizeCap = 16;

/// Size cap enforced by permanent(). Defaults to kDefaultPermanentSizeCap;
/// the RAILSWAP_PERMANENT_CAP environment variable overrides it (read once).
std::size_t permanent_size_cap();

/// Matrix permanent via Ryser's formula with Gray-code subset iteration,
/// O(2^n * n). The permanent of the empty 0x0 matrix is 1.
///
/// Throws Error for non-square input or when n exceeds size_cap.
Complex permanent(const ComplexMatrix& m, std::size_t size_cap);

inline Complex permanent(const ComplexMatrix& m) { return permanent(m, permanent_size_cap()); }

}  // namespace railswap
