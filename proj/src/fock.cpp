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

#include "railswap/fock.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "railswap/error.hpp"
#include "railswap/permanent.hpp"

namespace railswap {

namespace {

constexpr double kAmplitudeDisplayFloor = 1e-14;

double factorial(int n) {
  double out = 1.0;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

std::uint64_t next_raw(std::mt19937_64& gen) { return gen(); }

// 53-bit uniform in [0, 1); pinned explicitly so counts reproduce across
// standard library implementations.
double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(next_raw(gen) >> 11) * 0x1.0p-53;
}

}  // namespace

int FockState::photon_count() const noexcept {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string FockState::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < occupations.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(occupations[i]);
  }
  out += ")";
  return out;
}

std::size_t FockBasis::dimension(int modes, int photons) {
  // C(modes + photons - 1, photons), saturating.
  constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
  std::size_t result = 1;
  for (int k = 1; k <= photons; ++k) {
    const auto numer = static_cast<std::size_t>(modes - 1 + k);
    if (result > kSaturated / numer) return kSaturated;
    result = result * numer / static_cast<std::size_t>(k);
  }
  return result;
}

FockBasis::FockBasis(int modes, int photons, std::size_t size_cap)
    : modes_(modes), photons_(photons) {
  if (modes < 1) throw Error("fock basis needs at least one mode");
  if (photons < 0) throw Error("fock basis photon number must be >= 0");
  const std::size_t dim = dimension(modes, photons);
  if (dim > size_cap) {
    throw Error("fock basis size " + std::to_string(dim) + " exceeds cap " +
                std::to_string(size_cap));
  }
  states_.reserve(dim);
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  occ[0] = photons;
  while (true) {
    states_.push_back(FockState{occ});
    // Descending-lex successor: decrement the rightmost nonzero entry left
    // of the last mode and move everything after it next to it.
    int pivot = modes - 2;
    while (pivot >= 0 && occ[static_cast<std::size_t>(pivot)] == 0) --pivot;
    if (pivot < 0) break;
    int tail = 0;
    for (std::size_t j = static_cast<std::size_t>(pivot) + 1; j < occ.size(); ++j) {
      tail += occ[j];
      occ[j] = 0;
    }
    occ[static_cast<std::size_t>(pivot)] -= 1;
    occ[static_cast<std::size_t>(pivot) + 1] = tail + 1;
  }
}

std::size_t FockBasis::index_of(const FockState& state) const {
  if (state.modes() != modes_) {
    throw Error("fock state has " + std::to_string(state.modes()) + " modes, basis has " +
                std::to_string(modes_));
  }
  int remaining = photons_;
  std::size_t rank = 0;
  for (int i = 0; i < modes_; ++i) {
    const int occ = state.occupations[static_cast<std::size_t>(i)];
    if (occ < 0 || occ > remaining) {
      throw Error("fock state photon count differs from basis photon number " +
                  std::to_string(photons_));
    }
    for (int v = remaining; v > occ; --v) {
      rank += dimension(modes_ - i - 1, remaining - v);
    }
    remaining -= occ;
  }
  if (remaining != 0) {
    throw Error("fock state photon count differs from basis photon number " +
                std::to_string(photons_));
  }
  return rank;
}

PhotonicState::PhotonicState(int width, int photons)
    : basis_(std::make_shared<const FockBasis>(width, photons)),
      amplitudes_(basis_->size(), Complex(0.0, 0.0)) {}

PhotonicState::PhotonicState(std::shared_ptr<const FockBasis> basis)
    : basis_(std::move(basis)), amplitudes_(basis_->size(), Complex(0.0, 0.0)) {}

PhotonicState PhotonicState::basis_state(const FockState& occupation) {
  PhotonicState out(occupation.modes(), occupation.photon_count());
  out.set_amplitude(out.basis().index_of(occupation), Complex(1.0, 0.0));
  return out;
}

double PhotonicState::norm_squared() const noexcept {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

Complex transition_amplitude(const ComplexMatrix& u, const FockState& in, const FockState& out) {
  const int width = in.modes();
  if (out.modes() != width || u.rows() != u.cols() ||
      u.rows() != static_cast<std::size_t>(width)) {
    throw Error("transition_amplitude: transform is " + u.shape_string() + " but states have " +
                std::to_string(width) + " and " + std::to_string(out.modes()) + " modes");
  }
  const int n = in.photon_count();
  if (out.photon_count() != n) {
    throw Error("transition_amplitude: photon number mismatch (" + std::to_string(n) + " vs " +
                std::to_string(out.photon_count()) + ")");
  }
  // U_sub repeats column i input_i times and row j output_j times.
  std::vector<int> col_modes;
  std::vector<int> row_modes;
  col_modes.reserve(static_cast<std::size_t>(n));
  row_modes.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < width; ++m) {
    col_modes.insert(col_modes.end(), static_cast<std::size_t>(in.occupations[m]), m);
    row_modes.insert(row_modes.end(), static_cast<std::size_t>(out.occupations[m]), m);
  }
  ComplexMatrix sub(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < row_modes.size(); ++r) {
    for (std::size_t c = 0; c < col_modes.size(); ++c) {
      sub(r, c) = u(static_cast<std::size_t>(row_modes[r]), static_cast<std::size_t>(col_modes[c]));
    }
  }
  double norm = 1.0;
  for (int m = 0; m < width; ++m) {
    norm *= factorial(in.occupations[m]) * factorial(out.occupations[m]);
  }
  return permanent(sub) / std::sqrt(norm);
}

PhotonicState evolve(const ComplexMatrix& u, const PhotonicState& state) {
  if (u.rows() != u.cols() || u.rows() != static_cast<std::size_t>(state.width())) {
    throw Error("evolve: transform is " + u.shape_string() + " but state has " +
                std::to_string(state.width()) + " modes");
  }
  PhotonicState out(state.basis_ptr());
  if (state.photons() == 1) {
    // Basis index i is the photon's mode, so the transform acts directly.
    for (std::size_t j = 0; j < out.basis().size(); ++j) {
      Complex sum(0.0, 0.0);
      for (std::size_t i = 0; i < out.basis().size(); ++i) {
        sum += u(j, i) * state.amplitude(i);
      }
      out.set_amplitude(j, sum);
    }
    return out;
  }
  const FockBasis& basis = state.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex t = transition_amplitude(u, basis.state(i), basis.state(j));
      out.set_amplitude(j, out.amplitude(j) + a * t);
    }
  }
  return out;
}

std::vector<std::pair<FockState, double>> probabilities(const PhotonicState& state) {
  std::vector<std::pair<FockState, double>> out;
  out.reserve(state.basis().size());
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    const double mag = std::abs(state.amplitude(i));
    const double p = mag < kAmplitudeDisplayFloor ? 0.0 : mag * mag;
    out.emplace_back(state.basis().state(i), p);
  }
  return out;
}

std::vector<std::pair<FockState, std::int64_t>> sample(const PhotonicState& state,
                                                       std::uint64_t seed, std::int64_t shots) {
  if (shots < 1) throw Error("sample: shots must be >= 1");
  const std::size_t dim = state.basis().size();
  std::vector<double> cumulative(dim, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    total += std::norm(state.amplitude(i));
    cumulative[i] = total;
  }
  if (total <= 0.0) throw Error("sample: state carries no probability mass");
  std::mt19937_64 gen(seed);
  std::vector<std::int64_t> counts(dim, 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double r = next_uniform(gen) * total;
    std::size_t idx = 0;
    while (idx + 1 < dim && cumulative[idx] <= r) ++idx;
    ++counts[idx];
  }
  std::vector<std::pair<FockState, std::int64_t>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (counts[i] > 0) out.emplace_back(state.basis().state(i), counts[i]);
  }
  return out;
}

}  // namespace railswap
