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

#include "railswap/router.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "railswap/dualrail.hpp"
#include "railswap/error.hpp"

namespace railswap {

namespace {

void check_layer_positions(const SwapNetwork& net) {
  for (const auto& layer : net.layers) {
    for (int i : layer) {
      if (i < 0 || i + 1 >= net.qubit_count) {
        throw Error("swap position " + std::to_string(i) + " out of range for " +
                    std::to_string(net.qubit_count) + " qubits");
      }
    }
  }
}

}  // namespace

int SwapNetwork::swap_count() const noexcept {
  int total = 0;
  for (const auto& layer : layers) total += static_cast<int>(layer.size());
  return total;
}

SwapNetwork synthesize(std::span<const int> target) {
  const int n = static_cast<int>(target.size());
  if (n < 1) throw Error("permutation is empty");
  std::vector<bool> seen(n, false);
  for (int q : target) {
    if (q < 0 || q >= n) {
      throw Error("permutation entry " + std::to_string(q) + " out of range for " +
                  std::to_string(n) + " qubits");
    }
    if (seen[q]) throw Error("duplicate entry " + std::to_string(q) + " in permutation");
    seen[q] = true;
  }

  // Odd-even transposition sort brings `target` back to the identity; each
  // swap removes exactly one inversion, so the count is optimal. Replaying
  // the layers in reverse then carries the identity to `target`.
  SwapNetwork net;
  net.qubit_count = n;
  net.target.assign(target.begin(), target.end());

  std::vector<int> arr(target.begin(), target.end());
  std::vector<std::vector<int>> sorting_layers;
  for (int round = 0; round < n; ++round) {
    std::vector<int> layer;
    for (int i = round % 2; i + 1 < n; i += 2) {
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        layer.push_back(i);
      }
    }
    if (!layer.empty()) sorting_layers.push_back(std::move(layer));
  }
  net.layers.assign(sorting_layers.rbegin(), sorting_layers.rend());
  return net;
}

std::vector<int> apply_network(const SwapNetwork& net) {
  if (net.qubit_count < 1) throw Error("network has no qubits");
  check_layer_positions(net);
  std::vector<int> arr(net.qubit_count);
  std::iota(arr.begin(), arr.end(), 0);
  for (const auto& layer : net.layers) {
    for (int i : layer) std::swap(arr[i], arr[i + 1]);
  }
  return arr;
}

NetworkCost network_cost(const SwapNetwork& net, PerSwapCost per_swap,
                         double loss_db_per_crossing) {
  if (net.qubit_count < 1) throw Error("network has no qubits");
  if (per_swap.rbs_count < 0 || per_swap.crossing_count < 0) {
    throw Error("per-swap element counts must be nonnegative");
  }
  if (loss_db_per_crossing < 0) throw Error("loss must be nonnegative");
  check_layer_positions(net);

  NetworkCost cost;
  cost.swap_count = net.swap_count();
  cost.depth = net.depth();
  cost.rbs_total = cost.swap_count * per_swap.rbs_count;
  cost.crossing_total = cost.swap_count * per_swap.crossing_count;

  // Track each qubit through the schedule; its photon can traverse every
  // crossing of every tile it rides through.
  std::vector<int> arr(net.qubit_count);
  std::iota(arr.begin(), arr.end(), 0);
  std::vector<int> traversals(net.qubit_count, 0);
  for (const auto& layer : net.layers) {
    for (int i : layer) {
      traversals[arr[i]] += per_swap.crossing_count;
      traversals[arr[i + 1]] += per_swap.crossing_count;
      std::swap(arr[i], arr[i + 1]);
    }
  }
  cost.worst_case_crossings_per_photon =
      *std::max_element(traversals.begin(), traversals.end());

  cost.loss_db_per_crossing = loss_db_per_crossing;
  cost.loss_budget_db = cost.crossing_total * loss_db_per_crossing;
  cost.photon_survival = std::pow(10.0, -cost.loss_budget_db / 10.0);
  return cost;
}

Circuit emit_netlist(const SwapNetwork& net, GateTarget setting) {
  const std::vector<GateTarget> settings(static_cast<std::size_t>(net.swap_count()), setting);
  return emit_netlist(net, settings);
}

Circuit emit_netlist(const SwapNetwork& net, std::span<const GateTarget> settings) {
  if (net.qubit_count < 1) throw Error("network has no qubits");
  check_layer_positions(net);
  if (settings.size() != static_cast<std::size_t>(net.swap_count())) {
    throw Error("expected " + std::to_string(net.swap_count()) + " gate settings, got " +
                std::to_string(settings.size()));
  }

  const DualRailRegister reg = DualRailRegister::consecutive(net.qubit_count);
  Circuit out(reg.width);
  std::size_t next = 0;
  for (const auto& layer : net.layers) {
    std::vector<int> ordered(layer);
    std::sort(ordered.begin(), ordered.end());
    for (int i : ordered) {
      out.append(build_gate(GateSettings::preset(settings[next++]), i, i + 1, reg));
    }
  }
  return out;
}

}  // namespace railswap
