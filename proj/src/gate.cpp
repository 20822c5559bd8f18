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

#include "railswap/gate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "railswap/error.hpp"

namespace railswap {

namespace {

constexpr double kNormTolerance = 1e-10;

// One four-rail gate tile starting at rail `base`: crossing stage, two
// beam-splitter cells, optional mismatch shifter, closing crossing stage.
void append_crossing_stage(Circuit& c, const GateSettings& s, int base) {
  const int inner_lo = base + 1;
  const int inner_hi = base + 2;
  if (s.crossing_style == CrossingStyle::IdealCrossing) {
    c.add(Component::crossing(inner_lo, inner_hi, s.crossing_loss_db));
    return;
  }
  // An MZI at theta = 0 is i times the ideal crossing. The straight-through
  // rails need matching pi/2 shifters or the two presets would pick up
  // different relative phases and stop agreeing with the ideal layout.
  c.add(Component::mzi(inner_lo, inner_hi, 0.0, s.crossing_loss_db));
  c.add(Component::phase_shifter(base, std::numbers::pi / 2));
  c.add(Component::phase_shifter(base + 3, std::numbers::pi / 2));
}

void append_gate_tile(Circuit& c, const GateSettings& s, int base) {
  append_crossing_stage(c, s, base);
  c.add(Component::rbs(base, base + 1, s.theta, s.phi));
  c.add(Component::rbs(base + 2, base + 3, s.theta, s.phi));
  if (s.mismatch_eta != 0.0) c.add(Component::phase_shifter(base, s.mismatch_eta));
  append_crossing_stage(c, s, base);
}

std::string rails_text(std::pair<int, int> rails) {
  return "(" + std::to_string(rails.first) + "," + std::to_string(rails.second) + ")";
}

}  // namespace

GateSettings GateSettings::identity_preset() {
  GateSettings s;
  s.theta = std::numbers::pi;
  s.phi = std::numbers::pi;
  return s;
}

GateSettings GateSettings::preset(GateTarget target) {
  return target == GateTarget::Swap ? swap_preset() : identity_preset();
}

ComplexMatrix swap_gate_matrix() {
  return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

ComplexMatrix target_matrix(GateTarget target) {
  return target == GateTarget::Swap ? swap_gate_matrix() : ComplexMatrix::identity(4);
}

Circuit build_gate(const GateSettings& settings, int qubit_a, int qubit_b,
                   const DualRailRegister& reg) {
  reg.validate();
  const int k = reg.qubit_count();
  for (int q : {qubit_a, qubit_b}) {
    if (q < 0 || q >= k) {
      throw Error("qubit index " + std::to_string(q) + " outside register of " +
                  std::to_string(k) + " qubits");
    }
  }
  if (qubit_a == qubit_b) throw Error("gate needs two distinct qubits");

  auto lo = reg.rails[qubit_a];
  auto hi = reg.rails[qubit_b];
  if (lo.first > hi.first) std::swap(lo, hi);
  const bool adjacent = lo.second == lo.first + 1 && hi.first == lo.first + 2 &&
                        hi.second == lo.first + 3;
  if (!adjacent) {
    throw Error("qubits " + std::to_string(qubit_a) + " and " + std::to_string(qubit_b) +
                " sit on rails " + rails_text(reg.rails[qubit_a]) + " and " +
                rails_text(reg.rails[qubit_b]) +
                "; the gate needs four consecutive rails - synthesize a swap network to route "
                "them adjacent first");
  }

  Circuit c(reg.width);
  append_gate_tile(c, settings, lo.first);
  return c;
}

std::vector<MismatchPoint> mismatch_sweep(const GateSettings& base, std::span<const double> etas,
                                          GateTarget target) {
  if (etas.empty()) throw Error("mismatch sweep needs at least one eta value");
  const DualRailRegister reg = DualRailRegister::consecutive(2);
  const ComplexMatrix goal = target_matrix(target);
  std::vector<MismatchPoint> points;
  points.reserve(etas.size());
  for (double eta : etas) {
    GateSettings s = base;
    s.mismatch_eta = eta;
    const LogicalGateMatrix lm = logical_matrix(build_gate(s, 0, 1, reg), reg);
    points.push_back({eta, process_fidelity(lm, goal)});
  }
  return points;
}

MeasurementStage build_measurement_stage(MeasurementMode mode, std::pair<int, int> qubit_rails,
                                         std::pair<int, int> ancilla_rails, double mismatch_eta,
                                         int width) {
  const int base = qubit_rails.first;
  const bool consecutive = qubit_rails.second == base + 1 && ancilla_rails.first == base + 2 &&
                           ancilla_rails.second == base + 3;
  if (base < 0 || !consecutive || base + 4 > width) {
    throw Error("measurement stage needs qubit rails " + rails_text(qubit_rails) +
                " and ancilla rails " + rails_text(ancilla_rails) +
                " on four consecutive rails inside width " + std::to_string(width));
  }
  GateSettings s = mode == MeasurementMode::Measure ? GateSettings::swap_preset()
                                                    : GateSettings::identity_preset();
  s.mismatch_eta = mismatch_eta;

  MeasurementStage stage{Circuit(width), {ancilla_rails.first, ancilla_rails.second}};
  append_gate_tile(stage.circuit, s, base);
  return stage;
}

PhotonicState apply_measurement_stage(const MeasurementStage& stage, const PhotonicState& input) {
  if (input.width() != stage.circuit.width()) {
    throw Error("state width " + std::to_string(input.width()) + " does not match stage width " +
                std::to_string(stage.circuit.width()));
  }
  for (std::size_t i = 0; i < input.basis().size(); ++i) {
    if (input.amplitude(i) == Complex{}) continue;
    for (int mode : stage.detector_modes) {
      if (input.basis().state(i).occupations[mode] != 0) {
        throw Error("detector rail " + std::to_string(mode) + " must start in vacuum");
      }
    }
  }
  return evolve(compile(stage.circuit).unitary, input);
}

MeasurementStageReport measurement_stats(Complex alpha, Complex beta, MeasurementMode mode,
                                         double mismatch_eta, std::int64_t shots,
                                         std::uint64_t seed) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw Error("qubit amplitudes are not normalized (|v|^2 = " + std::to_string(norm2) + ")");
  }
  if (shots < 0) throw Error("shots must be nonnegative");

  const MeasurementStage stage = build_measurement_stage(mode, {0, 1}, {2, 3}, mismatch_eta, 4);
  PhotonicState input(4, 1);
  input.set_amplitude(0, alpha);  // single-photon basis index equals the mode
  input.set_amplitude(1, beta);
  const PhotonicState evolved = apply_measurement_stage(stage, input);

  MeasurementStageReport report;
  report.mode = mode;
  report.p_zero = std::norm(evolved.amplitude(2));
  report.p_one = std::norm(evolved.amplitude(3));
  if (mode == MeasurementMode::Bypass) {
    report.bypass_output = {{evolved.amplitude(0), evolved.amplitude(1)}};
  }
  report.shots = shots;
  report.seed = seed;
  if (shots >= 1) {
    for (const auto& [state, count] : sample(evolved, seed, shots)) {
      if (state.occupations[2] == 1) report.counts_zero += count;
      if (state.occupations[3] == 1) report.counts_one += count;
    }
  }
  return report;
}

OverheadReport overhead_report(double loss_db_per_crossing, int crossings_per_photon) {
  if (loss_db_per_crossing < 0) throw Error("loss must be nonnegative");
  if (crossings_per_photon < 0) throw Error("crossing count must be nonnegative");

  OverheadReport r;
  r.loss_db_per_crossing = loss_db_per_crossing;
  r.crossings_per_photon = crossings_per_photon;
  r.transmittance_per_crossing = std::pow(10.0, -loss_db_per_crossing / 10.0);
  r.photon_survival = std::pow(10.0, -loss_db_per_crossing * crossings_per_photon / 10.0);
  r.gate_success_probability = r.photon_survival * r.photon_survival;
  r.cnot_baseline_success = 1.0 / (16.0 * 16.0 * 16.0);
  return r;
}

}  // namespace railswap
