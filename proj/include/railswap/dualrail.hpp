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

#include <span>
#include <utility>
#include <vector>

#include "railswap/components.hpp"
#include "railswap/fock.hpp"
#include "railswap/matrix.hpp"

namespace railswap {

/// Mapping of k logical qubits onto 2k rail modes. rails[q] names the modes
/// carrying |0> and |1> of qubit q; all rail modes must be distinct and lie
/// inside the circuit width. Logical basis index ordering puts qubit 0 in
/// the most significant bit.
struct DualRailRegister {
  std::vector<std::pair<int, int>> rails;
  int width = 0;

  /// Qubit q on rails (2q, 2q+1). Width defaults to 2*qubits.
  static DualRailRegister consecutive(int qubits);
  static DualRailRegister consecutive(int qubits, int width);

  int qubit_count() const noexcept { return static_cast<int>(rails.size()); }
  std::size_t logical_dimension() const noexcept { return std::size_t{1} << rails.size(); }

  void validate() const;
};

/// Places one photon per rail pair according to the logical amplitudes
/// (length 2^k, normalized within 1e-10). Non-register modes stay vacuum.
PhotonicState encode(std::span<const Complex> logical_amplitudes, const DualRailRegister& reg);

struct DecodeResult {
  std::vector<Complex> amplitudes;  // renormalized logical amplitudes
  double success_probability;       // squared norm of the projection
};

/// Projects onto the subspace with exactly one photon per rail pair and
/// vacuum elsewhere. Throws Error when the projection carries no weight
/// ("state outside logical subspace").
DecodeResult decode(const PhotonicState& state, const DualRailRegister& reg);

/// Extracted logical action of a circuit. Columns are decode-renormalized,
/// so for a unitary circuit that preserves the dual-rail subspace the matrix
/// is unitary and success_probability is 1.
struct LogicalGateMatrix {
  ComplexMatrix matrix;
  double success_probability = 0.0;
};

/// Column j = decode(evolve(compile(circuit), encode(e_j)));
/// success_probability is the minimum column success.
LogicalGateMatrix logical_matrix(const Circuit& circuit, const DualRailRegister& reg);

/// Process fidelity |Tr(target^dagger actual)|^2 / d^2 between the extracted
/// gate and a target unitary; global-phase invariant by construction.
double process_fidelity(const LogicalGateMatrix& actual, const ComplexMatrix& target);

}  // namespace railswap
