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

#include "railswap/dualrail.hpp"

#include <cmath>
#include <string>

#include "railswap/error.hpp"

namespace railswap {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kSubspaceFloor = 1e-24;

// Occupation pattern for logical basis state `index` (qubit 0 = MSB).
std::vector<int> basis_occupation(std::size_t index, const DualRailRegister& reg) {
  std::vector<int> occ(reg.width, 0);
  const int k = reg.qubit_count();
  for (int q = 0; q < k; ++q) {
    const bool one = (index >> (k - 1 - q)) & 1u;
    occ[one ? reg.rails[q].second : reg.rails[q].first] += 1;
  }
  return occ;
}

}  // namespace

DualRailRegister DualRailRegister::consecutive(int qubits) {
  return consecutive(qubits, 2 * qubits);
}

DualRailRegister DualRailRegister::consecutive(int qubits, int width) {
  if (qubits < 1) throw Error("register needs at least one qubit, got " + std::to_string(qubits));
  DualRailRegister reg;
  reg.width = width;
  for (int q = 0; q < qubits; ++q) reg.rails.emplace_back(2 * q, 2 * q + 1);
  reg.validate();
  return reg;
}

void DualRailRegister::validate() const {
  if (rails.empty()) throw Error("register has no qubits");
  if (qubit_count() > 20) {
    throw Error("register with " + std::to_string(qubit_count()) + " qubits exceeds the supported maximum of 20");
  }
  std::vector<bool> used(width, false);
  for (const auto& [zero, one] : rails) {
    for (int mode : {zero, one}) {
      if (mode < 0 || mode >= width) {
        throw Error("rail mode " + std::to_string(mode) + " outside width " + std::to_string(width));
      }
      if (used[mode]) throw Error("rail mode " + std::to_string(mode) + " assigned twice");
      used[mode] = true;
    }
  }
}

PhotonicState encode(std::span<const Complex> logical_amplitudes, const DualRailRegister& reg) {
  reg.validate();
  const std::size_t dim = reg.logical_dimension();
  if (logical_amplitudes.size() != dim) {
    throw Error("expected " + std::to_string(dim) + " logical amplitudes for " +
                std::to_string(reg.qubit_count()) + " qubits, got " +
                std::to_string(logical_amplitudes.size()));
  }
  double norm2 = 0.0;
  for (const Complex& a : logical_amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw Error("logical amplitudes are not normalized (|v|^2 = " + std::to_string(norm2) + ")");
  }

  PhotonicState state(reg.width, reg.qubit_count());
  for (std::size_t j = 0; j < dim; ++j) {
    if (logical_amplitudes[j] == Complex{}) continue;
    state.set_amplitude(state.basis().index_of(FockState{basis_occupation(j, reg)}),
                        logical_amplitudes[j]);
  }
  return state;
}

DecodeResult decode(const PhotonicState& state, const DualRailRegister& reg) {
  reg.validate();
  if (state.basis().modes() != reg.width) {
    throw Error("state width " + std::to_string(state.basis().modes()) +
                " does not match register width " + std::to_string(reg.width));
  }

  const std::size_t dim = reg.logical_dimension();
  DecodeResult result;
  result.amplitudes.assign(dim, Complex{});
  result.success_probability = 0.0;
  if (state.basis().photons() == reg.qubit_count()) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex a =
          state.amplitude(state.basis().index_of(FockState{basis_occupation(j, reg)}));
      result.amplitudes[j] = a;
      result.success_probability += std::norm(a);
    }
  }
  if (result.success_probability <= kSubspaceFloor) {
    throw Error("state outside logical subspace: projection has no weight");
  }
  const double scale = 1.0 / std::sqrt(result.success_probability);
  for (Complex& a : result.amplitudes) a *= scale;
  return result;
}

LogicalGateMatrix logical_matrix(const Circuit& circuit, const DualRailRegister& reg) {
  reg.validate();
  if (circuit.width() != reg.width) {
    throw Error("circuit width " + std::to_string(circuit.width()) +
                " does not match register width " + std::to_string(reg.width));
  }
  const CompiledCircuit compiled = compile(circuit);
  const std::size_t dim = reg.logical_dimension();

  LogicalGateMatrix out{ComplexMatrix(dim, dim), 1.0};
  std::vector<Complex> column(dim, Complex{});
  for (std::size_t j = 0; j < dim; ++j) {
    column.assign(dim, Complex{});
    column[j] = 1.0;
    const PhotonicState evolved = evolve(compiled.unitary, encode(column, reg));
    const DecodeResult dec = decode(evolved, reg);
    for (std::size_t i = 0; i < dim; ++i) out.matrix(i, j) = dec.amplitudes[i];
    out.success_probability = std::min(out.success_probability, dec.success_probability);
  }
  return out;
}

double process_fidelity(const LogicalGateMatrix& actual, const ComplexMatrix& target) {
  if (target.rows() != target.cols()) throw Error("target matrix must be square");
  if (actual.matrix.rows() != target.rows() || actual.matrix.cols() != target.cols()) {
    throw Error("gate and target dimensions differ");
  }
  if (!is_unitary(target, 1e-10)) throw Error("target matrix is not unitary");

  Complex trace = 0.0;
  const std::size_t d = target.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      trace += std::conj(target(k, i)) * actual.matrix(k, i);
    }
  }
  return std::norm(trace) / static_cast<double>(d * d);
}

}  // namespace railswap
