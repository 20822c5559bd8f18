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
#include <vector>

#include "railswap/matrix.hpp"

namespace railswap {

enum class ComponentKind { PhaseShifter, DirectionalCoupler, Mzi, Rbs, Crossing };

/// One placed optical element. Mode indices are 0-based and validated against
/// the circuit width when the component is added to a Circuit.
///
/// Parameter meaning by kind:
///   PhaseShifter        param_a = phi (radians), single mode
///   DirectionalCoupler  param_a = eta_c coupling ratio in [0, 1]
///   Mzi                 param_a = internal phase theta (radians)
///   Rbs                 param_a = theta, param_b = phi (radians)
///   Crossing            no parameters
struct Component {
  ComponentKind kind = ComponentKind::PhaseShifter;
  int mode_a = 0;
  int mode_b = -1;  // -1 for single-mode elements
  double param_a = 0.0;
  double param_b = 0.0;
  double loss_db = 0.0;  // uniform insertion loss, >= 0

  static Component phase_shifter(int mode, double phi, double loss_db = 0.0);
  static Component directional_coupler(int a, int b, double eta_c, double loss_db = 0.0);
  static Component mzi(int a, int b, double theta, double loss_db = 0.0);
  static Component rbs(int a, int b, double theta, double phi, double loss_db = 0.0);
  static Component crossing(int a, int b, double loss_db = 0.0);

  int mode_count() const noexcept { return mode_b < 0 ? 1 : 2; }

  bool operator==(const Component&) const = default;
};

/// Ordered netlist of components over a fixed number of modes. Elements are
/// applied first-to-last, matching left-to-right optical propagation.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const noexcept { return width_; }
  const std::vector<Component>& elements() const noexcept { return elements_; }

  /// Appends one component; throws Error if its modes fall outside the
  /// circuit width.
  Circuit& add(Component c);

  /// Concatenates another circuit of the same width.
  Circuit& append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  int width_;
  std::vector<Component> elements_;
};

/// [[e^{i phi}]]
ComplexMatrix u_phase_shifter(double phi);

/// Symmetric coupler convention with i on the cross terms:
/// [[sqrt(eta), i sqrt(1-eta)], [i sqrt(1-eta), sqrt(eta)]].
ComplexMatrix u_directional_coupler(double eta_c);

/// Physical composition coupler(0.5) * diag(e^{i theta}, 1) * coupler(0.5);
/// equals i e^{i theta/2} [[sin(t/2), cos(t/2)], [cos(t/2), -sin(t/2)]].
ComplexMatrix u_mzi(double theta);

/// Canonical reconfigurable beam splitter matrix
/// [[sin(t/2), cos(t/2)], [e^{i phi} cos(t/2), -e^{i phi} sin(t/2)]].
/// This is the normative form; the physical MZI + external shifter
/// composition matches it up to the global phase i e^{i theta/2}.
ComplexMatrix u_rbs(double theta, double phi);

/// Ideal lossless waveguide crossing: the exact 2x2 permutation.
ComplexMatrix u_crossing();

/// Local matrix of a component (1x1 or 2x2), loss excluded.
ComplexMatrix component_unitary(const Component& c);

/// Expands a 1x1 or 2x2 local matrix to width x width, identity elsewhere.
/// Non-adjacent mode pairs are supported. Throws Error on out-of-range or
/// duplicate modes.
ComplexMatrix embed(const ComplexMatrix& local, std::span<const int> modes, int width);

/// Result of flattening a Circuit. `unitary` is the lossless mode transform;
/// insertion losses accumulate separately, per mode, as amplitude factors
/// sqrt(10^(-dB/10)) per traversed element. The factors are bookkeeping for
/// loss reports; state evolution always uses the lossless unitary together
/// with post-selection on no photon loss.
struct CompiledCircuit {
  ComplexMatrix unitary;
  std::vector<double> mode_amplitude_factor;

  bool lossless() const noexcept;
};

/// Product of embedded element matrices with element k applied before
/// element k+1, i.e. U = E_N ... E_2 E_1.
CompiledCircuit compile(const Circuit& circuit);

}  // namespace railswap
