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

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "railswap/matrix.hpp"

namespace railswap {

/// Occupation-number basis state: photon count per mode.
struct FockState {
  std::vector<int> occupations;

  int photon_count() const noexcept;
  int modes() const noexcept { return static_cast<int>(occupations.size()); }

  /// "(1,0,1,0)"
  std::string to_string() const;

  bool operator==(const FockState&) const = default;
};

inline constexpr std::size_t kDefaultBasisSizeCap = 1000000;

/// Canonical n-photon, m-mode basis in lexicographically descending
/// occupation order: (n,0,...,0) first, (0,...,0,n) last. The ordering is
/// part of the contract; reports and amplitude vectors index into it.
class FockBasis {
 public:
  FockBasis(int modes, int photons, std::size_t size_cap = kDefaultBasisSizeCap);

  int modes() const noexcept { return modes_; }
  int photons() const noexcept { return photons_; }
  std::size_t size() const noexcept { return states_.size(); }
  const FockState& state(std::size_t index) const { return states_[index]; }
  const std::vector<FockState>& states() const noexcept { return states_; }

  /// Combinatorial rank of an occupation vector within this basis.
  /// Throws Error if the state has the wrong mode or photon count.
  std::size_t index_of(const FockState& state) const;

  /// C(modes + photons - 1, photons), saturating on overflow.
  static std::size_t dimension(int modes, int photons);

 private:
  int modes_;
  int photons_;
  std::vector<FockState> states_;
};

/// Normalized (or post-selected) amplitude vector over a FockBasis. The
/// basis is shared and immutable, so states are cheap to copy and safe to
/// read concurrently.
class PhotonicState {
 public:
  PhotonicState(int width, int photons);
  explicit PhotonicState(std::shared_ptr<const FockBasis> basis);

  /// Amplitude 1 on the given occupation vector.
  static PhotonicState basis_state(const FockState& occupation);

  int width() const noexcept { return basis_->modes(); }
  int photons() const noexcept { return basis_->photons(); }
  const FockBasis& basis() const noexcept { return *basis_; }
  std::shared_ptr<const FockBasis> basis_ptr() const noexcept { return basis_; }

  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_[index]; }
  void set_amplitude(std::size_t index, Complex value) { amplitudes_[index] = value; }

  double norm_squared() const noexcept;

 private:
  std::shared_ptr<const FockBasis> basis_;
  std::vector<Complex> amplitudes_;
};

/// <out| U |in> for indistinguishable photons:
/// perm(U_sub) / sqrt(prod in_i! * prod out_j!), where U_sub repeats column i
/// input_i times and row j output_j times. Throws Error when the photon
/// numbers differ or the transform width does not match the states.
Complex transition_amplitude(const ComplexMatrix& u, const FockState& in, const FockState& out);

/// Evolves a state through an m-mode transform. Single-photon states take
/// the direct matrix-vector fast path; otherwise every output amplitude is a
/// permanent-based transition sum. Output order is the sequential basis
/// order, deterministically.
PhotonicState evolve(const ComplexMatrix& u, const PhotonicState& state);

/// |amplitude|^2 per basis state, in basis order. Amplitudes below 1e-14 in
/// magnitude are reported as exactly 0; internal state values are untouched.
std::vector<std::pair<FockState, double>> probabilities(const PhotonicState& state);

/// Multinomial draw over the state's outcome distribution. Deterministic
/// pseudorandom contract: the generator is std::mt19937_64 seeded with
/// `seed`, uniform doubles are (next() >> 11) * 2^-53, and each shot walks
/// the cumulative distribution in basis order. Identical (state, seed,
/// shots) give identical counts on every platform. Returns nonzero counts in
/// basis order. Throws Error when shots < 1 or the state has no probability
/// mass.
std::vector<std::pair<FockState, std::int64_t>> sample(const PhotonicState& state,
                                                       std::uint64_t seed, std::int64_t shots);

}  // namespace railswap
