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

// railswap command line front end.
//
// Exit codes: 0 success, 1 usage error (bad flags or malformed argument
// syntax), 2 simulation-domain error (netlist problems, values outside their
// legal range, states that cannot be prepared).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "railswap/dualrail.hpp"
#include "railswap/error.hpp"
#include "railswap/fock.hpp"
#include "railswap/gate.hpp"
#include "railswap/netlist.hpp"
#include "railswap/router.hpp"

namespace {

using railswap::Complex;

/// Malformed argument text; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All reals print with exactly 12 digits after the decimal point. Values
// below 1e-14 collapse to +0 so reports stay byte-identical across librarie
// and optimization levels.
std::string fmt(double v) {
  if (std::abs(v) < 1e-14) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  const double re = std::abs(z.real()) < 1e-14 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-14 ? 0.0 : z.imag();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, im);
  return buf;
}

double parse_real(const std::string& tok, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw UsageError("malformed " + what + " '" + tok + "'");
  }
  return v;
}

long parse_integer(const std::string& tok, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw UsageError("malformed " + what + " '" + tok + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

Complex parse_complex(const std::string& tok) {
  const auto parts = split(tok, ',');
  if (parts.size() != 2) {
    throw UsageError("malformed complex literal '" + tok + "', expected re,im");
  }
  return {parse_real(parts[0], "real part"), parse_real(parts[1], "imaginary part")};
}

void print_matrix(const railswap::ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) line += ' ';
      line += fmt_complex(m(r, c));
    }
    std::cout << line << '\n';
  }
}

railswap::PhotonicState parse_input_state(const std::string& spec, int width) {
  if (spec.rfind("fock:", 0) == 0) {
    std::vector<int> occupations;
    for (const std::string& tok : split(spec.substr(5), ',')) {
      occupations.push_back(static_cast<int>(parse_integer(tok, "occupation")));
    }
    if (static_cast<int>(occupations.size()) != width) {
      throw railswap::Error("input lists " + std::to_string(occupations.size()) +
                            " occupations for a " + std::to_string(width) + "-mode circuit");
    }
    for (int n : occupations) {
      if (n < 0) throw railswap::Error("occupation " + std::to_string(n) + " is negative");
    }
    return railswap::PhotonicState::basis_state(railswap::FockState{occupations});
  }
  if (spec.rfind("qubits:", 0) == 0) {
    std::vector<Complex> amps;
    for (const std::string& tok : split(spec.substr(7), ';')) amps.push_back(parse_complex(tok));
    int k = 0;
    while ((std::size_t{1} << k) < amps.size()) ++k;
    if (amps.size() < 2 || (std::size_t{1} << k) != amps.size()) {
      throw UsageError("qubits spec needs 2^k amplitudes, got " + std::to_string(amps.size()));
    }
    return railswap::encode(amps, railswap::DualRailRegister::consecutive(k, width));
  }
  throw UsageError("input spec must start with 'fock:' or 'qubits:'");
}

void run_simulate(const std::string& path, const std::string& input_spec) {
  std::ifstream file(path);
  if (!file) throw railswap::Error("cannot read netlist file '" + path + "'");
  std::stringstream text;
  text << file.rdbuf();

  const railswap::Circuit circuit = railswap::parse_circuit(text.str());
  const railswap::CompiledCircuit compiled = railswap::compile(circuit);
  const railswap::PhotonicState input = parse_input_state(input_spec, circuit.width());
  const railswap::PhotonicState output = railswap::evolve(compiled.unitary, input);

  std::cout << "modes=" << output.width() << " photons=" << output.photons()
            << " basis_size=" << output.basis().size() << '\n';
  for (const auto& [state, p] : railswap::probabilities(output)) {
    std::cout << state.to_string() << " p=" << fmt(p) << '\n';
  }
}

void run_gate(const std::string& mode, double eta, const std::string& crossing) {
  const railswap::GateTarget target =
      mode == "swap" ? railswap::GateTarget::Swap : railswap::GateTarget::Identity;
  railswap::GateSettings settings = railswap::GateSettings::preset(target);
  settings.mismatch_eta = eta;
  settings.crossing_style = crossing == "ideal" ? railswap::CrossingStyle::IdealCrossing
                                                : railswap::CrossingStyle::MziThetaZero;

  const railswap::DualRailRegister reg = railswap::DualRailRegister::consecutive(2);
  const railswap::Circuit circuit = railswap::build_gate(settings, 0, 1, reg);
  const railswap::LogicalGateMatrix lm = railswap::logical_matrix(circuit, reg);
  const double fidelity = railswap::process_fidelity(lm, railswap::target_matrix(target));

  std::cout << "mode=" << mode << " crossing=" << crossing << " eta=" << fmt(eta) << '\n';
  std::cout << "logical_matrix:" << '\n';
  print_matrix(lm.matrix);
  std::cout << "fidelity=" << fmt(fidelity) << '\n';
  std::cout << "success=" << fmt(lm.success_probability) << '\n';
}

void run_sweep(double from, double to, long steps, const std::string& target_name) {
  const railswap::GateTarget target =
      target_name == "swap" ? railswap::GateTarget::Swap : railswap::GateTarget::Identity;
  std::vector<double> etas;
  for (long i = 0; i < steps; ++i) {
    etas.push_back(steps == 1 ? from : from + (to - from) * static_cast<double>(i) /
                                                  static_cast<double>(steps - 1));
  }
  std::cout << "target=" << target_name << " steps=" << steps << '\n';
  const auto points =
      railswap::mismatch_sweep(railswap::GateSettings::preset(target), etas, target);
  for (const auto& p : points) {
    std::cout << "eta=" << fmt(p.eta) << " fidelity=" << fmt(p.fidelity) << '\n';
  }
}

void run_route(const std::string& perm_text, double loss_db) {
  std::vector<int> target;
  for (const std::string& tok : split(perm_text, ',')) {
    target.push_back(static_cast<int>(parse_integer(tok, "permutation entry")));
  }
  const railswap::SwapNetwork net = railswap::synthesize(target);
  const railswap::NetworkCost cost = railswap::network_cost(net, {}, loss_db);

  std::cout << "qubits=" << net.qubit_count << " swaps=" << cost.swap_count
            << " depth=" << cost.depth << '\n';
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    std::string line = "layer " + std::to_string(l + 1) + ":";
    for (int i : net.layers[l]) {
      line += " (" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
    }
    std::cout << line << '\n';
  }
  std::cout << "rbs_total=" << cost.rbs_total << " crossing_total=" << cost.crossing_total
            << '\n';
  std::cout << "worst_case_crossings_per_photon=" << cost.worst_case_crossings_per_photon << '\n';
  std::cout << "loss_budget_db=" << fmt(cost.loss_budget_db) << '\n';
  std::cout << "photon_survival=" << fmt(cost.photon_survival) << '\n';

  // The deterministic gate succeeds every time it is dialed in; the heralded
  // three-CNOT decomposition succeeds with probability (1/16)^3 per swap.
  const railswap::OverheadReport overhead = railswap::overhead_report(loss_db);
  std::cout << "swap_success=" << fmt(1.0) << '\n';
  std::cout << "cnot_baseline_per_swap=" << fmt(overhead.cnot_baseline_success) << '\n';
  std::cout << "cnot_baseline_network=" << fmt(std::pow(overhead.cnot_baseline_success,
                                                        static_cast<double>(cost.swap_count)))
            << '\n';
}

void run_measure_demo(const std::string& alpha_text, const std::string& beta_text,
                      const std::string& mode_name, double eta, long shots, long seed) {
  const Complex alpha = parse_complex(alpha_text);
  const Complex beta = parse_complex(beta_text);
  const railswap::MeasurementMode mode = mode_name == "measure"
                                             ? railswap::MeasurementMode::Measure
                                             : railswap::MeasurementMode::Bypass;
  const railswap::MeasurementStageReport report = railswap::measurement_stats(
      alpha, beta, mode, eta, shots, static_cast<std::uint64_t>(seed));

  std::cout << "mode=" << mode_name << " eta=" << fmt(eta) << '\n';
  std::cout << "p0=" << fmt(report.p_zero) << " p1=" << fmt(report.p_one) << '\n';
  if (report.bypass_output) {
    std::cout << "out0=" << fmt_complex(report.bypass_output->first)
              << " out1=" << fmt_complex(report.bypass_output->second) << '\n';
  }
  if (report.shots > 0) {
    std::cout << "shots=" << report.shots << " seed=" << report.seed
              << " counts0=" << report.counts_zero << " counts1=" << report.counts_one << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-optical dual-rail swap gate simulator"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "Evolve an input state through a netlist");
  std::string netlist_path;
  std::string input_spec;
  simulate->add_option("netlist", netlist_path, "Netlist file")->required();
  simulate->add_option("--input", input_spec, "fock:<n,...> or qubits:<re,im;...>")->required();

  auto* gate = app.add_subcommand("gate", "Build the four-rail gate and extract its action");
  std::string gate_mode = "swap";
  std::string crossing = "ideal";
  double gate_eta = 0.0;
  gate->add_option("--mode", gate_mode, "swap or identity")
      ->check(CLI::IsMember({"swap", "identity"}));
  gate->add_option("--eta", gate_eta, "phase mismatch in radians");
  gate->add_option("--crossing", crossing, "crossing realization")
      ->check(CLI::IsMember({"ideal", "mzi"}));

  auto* sweep = app.add_subcommand("sweep", "Fidelity versus phase mismatch");
  double eta_from = 0.0;
  double eta_to = 0.0;
  long steps = 0;
  std::string sweep_target = "swap";
  sweep->add_option("--eta-from", eta_from)->required();
  sweep->add_option("--eta-to", eta_to)->required();
  sweep->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--target", sweep_target)->check(CLI::IsMember({"swap", "identity"}));

  auto* route = app.add_subcommand("route", "Synthesize a nearest-neighbor swap network");
  std::string perm_text;
  double loss_db = 0.0;
  route->add_option("--perm", perm_text, "target permutation, e.g. 3,2,1,0")->required();
  route->add_option("--loss-db", loss_db, "insertion loss per crossing in dB")
      ->check(CLI::NonNegativeNumber);

  auto* demo = app.add_subcommand("measure-demo", "Single-qubit measurement stage report");
  std::string alpha_text;
  std::string beta_text;
  std::string demo_mode = "measure";
  double demo_eta = 0.0;
  long shots = 0;
  long seed = 0;
  demo->add_option("--alpha", alpha_text, "amplitude of |0> as re,im")->required();
  demo->add_option("--beta", beta_text, "amplitude of |1> as re,im")->required();
  demo->add_option("--mode", demo_mode)->check(CLI::IsMember({"measure", "bypass"}));
  demo->add_option("--eta", demo_eta, "phase mismatch in radians");
  demo->add_option("--shots", shots)->check(CLI::NonNegativeNumber);
  demo->add_option("--seed", seed)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
    if (simulate->parsed()) run_simulate(netlist_path, input_spec);
    if (gate->parsed()) run_gate(gate_mode, gate_eta, crossing);
    if (sweep->parsed()) run_sweep(eta_from, eta_to, steps, sweep_target);
    if (route->parsed()) run_route(perm_text, loss_db);
    if (demo->parsed()) run_measure_demo(alpha_text, beta_text, demo_mode, demo_eta, shots, seed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const railswap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
