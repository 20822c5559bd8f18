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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "railswap/components.hpp"
#include "railswap/dualrail.hpp"
#include "railswap/fock.hpp"
#include "railswap/matrix.hpp"

namespace railswap {

/// What the reconfigurable gate is dialed to implement.
enum class GateTarget { Swap, Identity };

/// How the two waveguide crossings are realized on chip.
enum class CrossingStyle { IdealCrossing, MziThetaZero };

/// Knobs for one reconfigurable two-qubit gate instance.
///
/// theta/phi drive the two beam-splitter cells: (0, 0) swaps the qubits,
/// (pi, pi) leaves them untouched. mismatch_eta models an unwanted relative
/// phase picked up on the first rail between the crossings.
struct GateSettings {
  double theta = 0.0;
  double phi = 0.0;
  double mismatch_eta = 0.0;
  CrossingStyle crossing_style = CrossingStyle::IdealCrossing;
  double crossing_loss_db = 0.0;

  static GateSettings swap_preset() { return {}; }
  static GateSettings identity_preset();
  static GateSettings preset(GateTarget target);
};

/// Logical SWAP on two qubits, basis order |00>,|01>,|10>,|11>.
ComplexMatrix swap_gate_matrix();

/// SWAP or the 4x4 identity, matching GateTarget.
ComplexMatrix target_matrix(GateTarget target);

/// Gate netlist acting on qubit_a and qubit_b of the register. The two
/// qubits must sit on four consecutive rails (a0, a0+1, a0+2, a0+3); for
/// any other placement this throws and the caller should synthesize a swap
/// network to bring them adjacent first.
Circuit build_gate(const GateSettings& settings, int qubit_a, int qubit_b,
                   const DualRailRegister& reg);

struct MismatchPoint {
  double eta;
  double fidelity;
};

/// Process fidelity against target_matrix(target) as mismatch_eta runs over
/// etas; all other settings come from base.
std::vector<MismatchPoint> mismatch_sweep(const GateSettings& base, std::span<const double> etas,
                                          GateTarget target);

/// Single-qubit measurement stage built from one gate tile: the qubit on
/// qubit_rails either gets routed onto ancilla_rails where detectors sit
/// (Measure) or passes through untouched (Bypass).
enum class MeasurementMode { Measure, Bypass };

struct MeasurementStage {
  Circuit circuit;
  std::vector<int> detector_modes;  // rails read out by the detectors
};

MeasurementStage build_measurement_stage(MeasurementMode mode, std::pair<int, int> qubit_rails,
                                         std::pair<int, int> ancilla_rails, double mismatch_eta,
                                         int width);

/// Runs a state through the stage. The detector rails must start in vacuum.
PhotonicState apply_measurement_stage(const MeasurementStage& stage, const PhotonicState& input);

struct MeasurementStageReport {
  MeasurementMode mode;
  double p_zero = 0.0;
  double p_one = 0.0;
  /// Qubit-rail amplitudes after the stage; only filled in bypass mode.
  std::optional<std::pair<Complex, Complex>> bypass_output;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::int64_t counts_zero = 0;
  std::int64_t counts_one = 0;
};

/// Feeds alpha|0> + beta|1> (normalized within 1e-10) through a four-rail
/// stage and reports detector statistics. With shots >= 1 in Measure mode it
/// also draws a deterministic sample of detector clicks.
MeasurementStageReport measurement_stats(Complex alpha, Complex beta, MeasurementMode mode,
                                         double mismatch_eta, std::int64_t shots = 0,
                                         std::uint64_t seed = 0);

struct OverheadReport {
  double loss_db_per_crossing = 0.0;
  int crossings_per_photon = 0;
  double transmittance_per_crossing = 1.0;  // 10^(-dB/10)
  double photon_survival = 1.0;             // both crossings, one photon
  double gate_success_probability = 1.0;    // both photons of the pair survive
  double cnot_baseline_success = 0.0;       // three heralded CNOTs at 1/16 each
};

/// Loss arithmetic for one gate traversal versus the probabilistic
/// three-CNOT decomposition it replaces.
OverheadReport overhead_report(double loss_db_per_crossing, int crossings_per_photon = 2);

}  // namespace railswap
