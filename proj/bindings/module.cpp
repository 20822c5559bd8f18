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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "railswap/components.hpp"
#include "railswap/dualrail.hpp"
#include "railswap/error.hpp"
#include "railswap/fock.hpp"
#include "railswap/gate.hpp"
#include "railswap/netlist.hpp"
#include "railswap/permanent.hpp"
#include "railswap/router.hpp"

namespace py = pybind11;

namespace {

using railswap::Complex;
using railswap::ComplexMatrix;
using Rows = std::vector<std::vector<Complex>>;

ComplexMatrix matrix_from(const Rows& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Complex> flat;
  flat.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw railswap::Error("matrix rows must all have the same length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(flat));
}

Rows matrix_to(const ComplexMatrix& m) {
  Rows rows(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

railswap::GateTarget target_from(const std::string& name) {
  if (name == "swap") return railswap::GateTarget::Swap;
  if (name == "identity") return railswap::GateTarget::Identity;
  throw railswap::Error("unknown gate target '" + name + "' (expected swap or identity)");
}

railswap::CrossingStyle crossing_from(const std::string& name) {
  if (name == "ideal") return railswap::CrossingStyle::IdealCrossing;
  if (name == "mzi") return railswap::CrossingStyle::MziThetaZero;
  throw railswap::Error("unknown crossing style '" + name + "' (expected ideal or mzi)");
}

railswap::MeasurementMode mode_from(const std::string& name) {
  if (name == "measure") return railswap::MeasurementMode::Measure;
  if (name == "bypass") return railswap::MeasurementMode::Bypass;
  throw railswap::Error("unknown measurement mode '" + name + "' (expected measure or bypass)");
}

py::tuple occupation_key(const std::vector<int>& occ) {
  py::tuple key(occ.size());
  for (std::size_t i = 0; i < occ.size(); ++i) key[i] = occ[i];
  return key;
}

py::dict simulate(const std::string& netlist, const std::vector<int>& occupations) {
  const railswap::Circuit circuit = railswap::parse_circuit(netlist);
  const railswap::CompiledCircuit compiled = railswap::compile(circuit);
  const railswap::PhotonicState input =
      railswap::PhotonicState::basis_state(railswap::FockState{occupations});
  const railswap::PhotonicState output = railswap::evolve(compiled.unitary, input);
  py::dict result;
  for (const auto& [state, p] : railswap::probabilities(output)) {
    result[occupation_key(state.occupations)] = p;
  }
  return result;
}

py::dict logical_gate(const std::string& target, const std::string& crossing,
                      double mismatch_eta) {
  railswap::GateSettings settings = railswap::GateSettings::preset(target_from(target));
  settings.crossing_style = crossing_from(crossing);
  settings.mismatch_eta = mismatch_eta;
  const auto reg = railswap::DualRailRegister::consecutive(2);
  const railswap::LogicalGateMatrix lm =
      railswap::logical_matrix(railswap::build_gate(settings, 0, 1, reg), reg);
  py::dict result;
  result["matrix"] = matrix_to(lm.matrix);
  result["fidelity"] =
      railswap::process_fidelity(lm, railswap::target_matrix(target_from(target)));
  result["success_probability"] = lm.success_probability;
  return result;
}

std::vector<std::pair<double, double>> mismatch_sweep(const std::vector<double>& etas,
                                                      const std::string& target) {
  const railswap::GateTarget t = target_from(target);
  std::vector<std::pair<double, double>> points;
  for (const auto& p : railswap::mismatch_sweep(railswap::GateSettings::preset(t), etas, t)) {
    points.emplace_back(p.eta, p.fidelity);
  }
  return points;
}

py::dict measurement_stats(Complex alpha, Complex beta, const std::string& mode, double eta,
                           std::int64_t shots, std::uint64_t seed) {
  const railswap::MeasurementStageReport r =
      railswap::measurement_stats(alpha, beta, mode_from(mode), eta, shots, seed);
  py::dict result;
  result["mode"] = mode;
  result["p_zero"] = r.p_zero;
  result["p_one"] = r.p_one;
  result["bypass_output"] =
      r.bypass_output ? py::cast(*r.bypass_output) : py::object(py::none());
  result["shots"] = r.shots;
  result["seed"] = r.seed;
  result["counts_zero"] = r.counts_zero;
  result["counts_one"] = r.counts_one;
  return result;
}

py::list layer_pairs(const railswap::SwapNetwork& net) {
  py::list layers;
  for (const auto& layer : net.layers) {
    py::list pairs;
    for (int pos : layer) pairs.append(py::make_tuple(pos, pos + 1));
    layers.append(pairs);
  }
  return layers;
}

py::dict synthesize(const std::vector<int>& target) {
  const railswap::SwapNetwork net = railswap::synthesize(target);
  py::dict result;
  result["qubit_count"] = net.qubit_count;
  result["swap_count"] = net.swap_count();
  result["depth"] = net.depth();
  result["layers"] = layer_pairs(net);
  return result;
}

py::dict network_cost(const std::vector<int>& target, double loss_db_per_crossing) {
  const railswap::SwapNetwork net = railswap::synthesize(target);
  const railswap::NetworkCost cost =
      railswap::network_cost(net, railswap::PerSwapCost{}, loss_db_per_crossing);
  py::dict result;
  result["swap_count"] = cost.swap_count;
  result["depth"] = cost.depth;
  result["rbs_total"] = cost.rbs_total;
  result["crossing_total"] = cost.crossing_total;
  result["worst_case_crossings_per_photon"] = cost.worst_case_crossings_per_photon;
  result["loss_db_per_crossing"] = cost.loss_db_per_crossing;
  result["loss_budget_db"] = cost.loss_budget_db;
  result["photon_survival"] = cost.photon_survival;
  return result;
}

std::string route_netlist(const std::vector<int>& target, const std::string& setting) {
  const railswap::SwapNetwork net = railswap::synthesize(target);
  return railswap::write_netlist(railswap::emit_netlist(net, target_from(setting)));
}

py::dict overhead_report(double loss_db_per_crossing, int crossings_per_photon) {
  const railswap::OverheadReport r =
      railswap::overhead_report(loss_db_per_crossing, crossings_per_photon);
  py::dict result;
  result["loss_db_per_crossing"] = r.loss_db_per_crossing;
  result["crossings_per_photon"] = r.crossings_per_photon;
  result["transmittance_per_crossing"] = r.transmittance_per_crossing;
  result["photon_survival"] = r.photon_survival;
  result["gate_success_probability"] = r.gate_success_probability;
  result["cnot_baseline_success"] = r.cnot_baseline_success;
  return result;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear-optical simulation of dual-rail photonic swap gates";

  py::register_exception<railswap::Error>(m, "Error", PyExc_ValueError);

  m.def("permanent",
        [](const Rows& rows) { return railswap::permanent(matrix_from(rows)); },
        py::arg("matrix"), "Permanent of a square complex matrix.");

  m.def("u_phase_shifter",
        [](double phi) { return matrix_to(railswap::u_phase_shifter(phi)); }, py::arg("phi"));
  m.def("u_directional_coupler",
        [](double eta_c) { return matrix_to(railswap::u_directional_coupler(eta_c)); },
        py::arg("eta_c"));
  m.def("u_mzi", [](double theta) { return matrix_to(railswap::u_mzi(theta)); },
        py::arg("theta"));
  m.def("u_rbs",
        [](double theta, double phi) { return matrix_to(railswap::u_rbs(theta, phi)); },
        py::arg("theta"), py::arg("phi"));
  m.def("u_crossing", [] { return matrix_to(railswap::u_crossing()); });
  m.def("swap_gate_matrix", [] { return matrix_to(railswap::swap_gate_matrix()); },
        "Logical two-qubit swap in the |00>,|01>,|10>,|11> basis.");

  m.def("transition_amplitude",
        [](const Rows& u, const std::vector<int>& in, const std::vector<int>& out) {
          return railswap::transition_amplitude(matrix_from(u), railswap::FockState{in},
                                                railswap::FockState{out});
        },
        py::arg("unitary"), py::arg("input"), py::arg("output"),
        "Amplitude to scatter one photon-number state into another.");

  m.def("simulate", &simulate, py::arg("netlist"), py::arg("occupations"),
        "Parse a netlist, feed in a photon-number state, and return the\n"
        "output probability of every number state as a dict keyed by\n"
        "occupation tuple.");

  m.def("logical_gate", &logical_gate, py::arg("target") = "swap",
        py::arg("crossing") = "ideal", py::arg("mismatch_eta") = 0.0,
        "Extract the logical two-qubit matrix of one gate tile along with\n"
        "its process fidelity against the dialed target and its success\n"
        "probability.");

  m.def("mismatch_sweep", &mismatch_sweep, py::arg("etas"), py::arg("target") = "swap",
        "Process fidelity as the rail phase mismatch runs over the given\n"
        "values; returns (eta, fidelity) pairs.");

  m.def("measurement_stats", &measurement_stats, py::arg("alpha"), py::arg("beta"),
        py::arg("mode") = "measure", py::arg("mismatch_eta") = 0.0, py::arg("shots") = 0,
        py::arg("seed") = 0,
        "Detector statistics for one qubit sent through a measurement stage.");

  m.def("synthesize", &synthesize, py::arg("target"),
        "Nearest-neighbor swap schedule realizing the qubit permutation.\n"
        "Layers hold disjoint (i, i+1) position pairs.");

  m.def("network_cost", &network_cost, py::arg("target"),
        py::arg("loss_db_per_crossing") = 0.0,
        "Component counts and loss budget for the schedule of a permutation.");

  m.def("route_netlist", &route_netlist, py::arg("target"), py::arg("setting") = "swap",
        "Expand the schedule for a permutation into netlist text, every tile\n"
        "dialed to the same setting.");

  m.def("overhead_report", &overhead_report, py::arg("loss_db_per_crossing"),
        py::arg("crossings_per_photon") = 2,
        "Loss arithmetic for one gate traversal versus the probabilistic\n"
        "three-CNOT decomposition.");
}
