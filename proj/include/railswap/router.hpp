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

#include "railswap/components.hpp"
#include "railswap/gate.hpp"

namespace railswap {

/// Nearest-neighbor swap schedule realizing a qubit permutation. Each layer
/// lists the left positions of disjoint (i, i+1) transpositions; layers run
/// in order and transpositions inside a layer commute.
struct SwapNetwork {
  int qubit_count = 0;
  std::vector<int> target;  // position p ends up holding qubit target[p]
  std::vector<std::vector<int>> layers;

  int swap_count() const noexcept;
  int depth() const noexcept { return static_cast<int>(layers.size()); }
};

/// Odd-even transposition schedule for the permutation, depth at most
/// qubit_count, swap count equal to the permutation's inversion count
/// (which is optimal for nearest-neighbor routing). The identity permutation
/// yields an empty network. Throws Error on duplicate or out-of-range
/// entries.
SwapNetwork synthesize(std::span<const int> target);

/// Applies the layers to the identity arrangement; returns the final
/// qubit-per-position list (equals net.target for a synthesized network).
std::vector<int> apply_network(const SwapNetwork& net);

struct PerSwapCost {
  int rbs_count = 2;
  int crossing_count = 2;
};

struct NetworkCost {
  int swap_count = 0;
  int depth = 0;
  int rbs_total = 0;
  int crossing_total = 0;
  /// Crossings traversed by the worst-off photon when it rides through
  /// every gate tile on its path.
  int worst_case_crossings_per_photon = 0;
  double loss_db_per_crossing = 0.0;
  double loss_budget_db = 0.0;   // crossing_total * per-crossing loss
  double photon_survival = 0.0;  // 10^(-loss_budget_db / 10)
};

NetworkCost network_cost(const SwapNetwork& net, PerSwapCost per_swap = {},
                         double loss_db_per_crossing = 0.0);

/// Expands the schedule into a rail-level circuit on 2 * qubit_count modes,
/// one gate tile per transposition. Every tile gets the same target preset.
Circuit emit_netlist(const SwapNetwork& net, GateTarget setting);

/// Per-transposition presets, in schedule order (layer by layer, ascending
/// position inside a layer); size must equal swap_count(). Tiles dialed to
/// Identity leave their pair untouched, which is how a partially-enabled
/// network is expressed.
Circuit emit_netlist(const SwapNetwork& net, std::span<const GateTarget> settings);

}  // namespace railswap
