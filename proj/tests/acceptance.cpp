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

// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line; the binary exits nonzero if any criterion fails. Invoked as
//   acceptance <path-to-railswap-binary> <goldens-directory>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "railswap/components.hpp"
#include "railswap/dualrail.hpp"
#include "railswap/error.hpp"
#include "railswap/fock.hpp"
#include "railswap/gate.hpp"
#include "railswap/netlist.hpp"
#include "railswap/permanent.hpp"
#include "railswap/router.hpp"
#include "support/cli_runner.hpp"
#include "support/oracles.hpp"

using railswap::Complex;
using railswap::ComplexMatrix;
using railswap::DualRailRegister;
using railswap::FockState;
using railswap::GateSettings;
using railswap::GateTarget;
using railswap::MeasurementMode;
using railswap::PhotonicState;
using std::numbers::pi;

namespace {

std::string g_cli;
std::string g_goldens;

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

railswap::LogicalGateMatrix extract_gate(const GateSettings& settings) {
  const DualRailRegister reg = DualRailRegister::consecutive(2);
  return railswap::logical_matrix(railswap::build_gate(settings, 0, 1, reg), reg);
}

void criterion_swap_correctness() {
  const auto lm = extract_gate(GateSettings::swap_preset());
  require(railswap::equal_up_to_global_phase(lm.matrix, railswap::swap_gate_matrix(), 1e-12),
          "logical matrix deviates from the swap target beyond 1e-12");
  require(std::abs(lm.success_probability - 1.0) <= 1e-10,
          "success probability not 1 within 1e-10");
}

void criterion_identity_correctness() {
  const auto lm = extract_gate(GateSettings::identity_preset());
  require(railswap::equal_up_to_global_phase(lm.matrix, ComplexMatrix::identity(4), 1e-12),
          "logical matrix deviates from identity beyond 1e-12");
  require(std::abs(lm.success_probability - 1.0) <= 1e-10,
          "success probability not 1 within 1e-10");
}

void criterion_product_state_action() {
  const DualRailRegister reg = DualRailRegister::consecutive(2);
  const ComplexMatrix u =
      railswap::compile(railswap::build_gate(GateSettings::swap_preset(), 0, 1, reg)).unitary;
  const ComplexMatrix swap = railswap::swap_gate_matrix();
  std::mt19937 rng(1001);

  for (int rep = 0; rep < 1000; ++rep) {
    const auto a = testsupport::random_state_vector(2, rng);
    const auto b = testsupport::random_state_vector(2, rng);
    const std::vector<Complex> in{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
    const std::vector<Complex> expected{b[0] * a[0], b[0] * a[1], b[1] * a[0], b[1] * a[1]};
    const auto out = railswap::decode(railswap::evolve(u, railswap::encode(in, reg)), reg);
    for (int i = 0; i < 4; ++i) {
      require(std::abs(out.amplitudes[i] - expected[i]) < 1e-10,
              "product state output deviates beyond 1e-10");
    }
  }
  for (int rep = 0; rep < 1000; ++rep) {
    const auto v = testsupport::random_state_vector(4, rng);
    const auto out = railswap::decode(railswap::evolve(u, railswap::encode(v, reg)), reg);
    for (int i = 0; i < 4; ++i) {
      Complex expected = 0.0;
      for (int j = 0; j < 4; ++j) expected += swap(i, j) * v[j];
      require(std::abs(out.amplitudes[i] - expected) < 1e-10,
              "entangled state output deviates from the matrix action beyond 1e-10");
    }
  }
}

void criterion_rbs_consistency() {
  std::mt19937 rng(1003);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int rep = 0; rep < 100; ++rep) {
    const double theta = angle(rng);
    const double phi = angle(rng);
    const ComplexMatrix shifter =
        ComplexMatrix::from_rows({{1, 0}, {0, std::polar(1.0, phi)}});
    const ComplexMatrix physical = shifter * railswap::u_mzi(theta);
    require(railswap::equal_up_to_global_phase(physical, railswap::u_rbs(theta, phi), 1e-12),
            "physical composition deviates from the canonical matrix beyond 1e-12");
  }
  const ComplexMatrix x = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  require(railswap::max_abs_diff(railswap::u_rbs(0.0, 0.0), x) == 0.0,
          "(0,0) setting is not exactly the exchange matrix");
  require(railswap::max_abs_diff(railswap::u_rbs(pi, pi), ComplexMatrix::identity(2)) <= 1e-15,
          "(pi,pi) setting deviates from identity beyond machine precision");
}

void criterion_crossing_involution() {
  railswap::Circuit c(4);
  c.add(railswap::Component::crossing(1, 2));
  c.add(railswap::Component::crossing(1, 2));
  require(railswap::max_abs_diff(railswap::compile(c).unitary, ComplexMatrix::identity(4)) <
              1e-12,
          "double crossing deviates from identity beyond 1e-12");
  require(railswap::equal_up_to_global_phase(railswap::u_mzi(0.0), railswap::u_crossing(),
                                             1e-12),
          "interferometer at theta=0 deviates from the crossing beyond 1e-12");
}

void criterion_permanent_oracle() {
  std::mt19937 rng(1005);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const ComplexMatrix m = testsupport::random_matrix(n, rng);
      const Complex fast = railswap::permanent(m);
      const Complex slow = testsupport::naive_permanent(m);
      require(std::abs(fast - slow) / std::max(1.0, std::abs(slow)) < 1e-10,
              "fast permanent deviates from permutation sum beyond 1e-10");
    }
  }
  const Complex coincidence = railswap::transition_amplitude(
      railswap::u_directional_coupler(0.5), FockState{{1, 1}}, FockState{{1, 1}});
  require(std::abs(coincidence) < 1e-12, "two-photon coincidence amplitude not suppressed");
}

void criterion_fock_evolution_oracle() {
  std::mt19937 rng(1007);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const ComplexMatrix u = testsupport::random_unitary(m, rng);
      PhotonicState state(m, n);
      const auto amps = testsupport::random_state_vector(state.basis().size(), rng);
      for (std::size_t i = 0; i < amps.size(); ++i) state.set_amplitude(i, amps[i]);

      const PhotonicState fast = railswap::evolve(u, state);
      const PhotonicState slow = testsupport::oracle_evolve(u, state);
      require(testsupport::max_amplitude_diff(fast, slow) < 1e-10,
              "evolution deviates from the substitution oracle beyond 1e-10");
      require(std::abs(fast.norm_squared() - 1.0) < 1e-10, "norm not conserved within 1e-10");
      require(fast.photons() == n, "photon number not conserved");
    }
  }
}

void criterion_measurement_invariance() {
  const Complex alpha{std::sqrt(0.3)};
  const Complex beta{Complex(0.5, 0.2) / std::abs(Complex(0.5, 0.2)) * std::sqrt(0.7)};
  for (int i = 0; i < 17; ++i) {
    const double eta = 2 * pi * i / 16.0;
    const auto measured =
        railswap::measurement_stats(alpha, beta, MeasurementMode::Measure, eta);
    require(std::abs(measured.p_zero - 0.3) < 1e-12,
            "measured zero-probability drifts with the mismatch beyond 1e-12");
    require(std::abs(measured.p_one - 0.7) < 1e-12,
            "measured one-probability drifts with the mismatch beyond 1e-12");

    const auto bypass = railswap::measurement_stats(alpha, beta, MeasurementMode::Bypass, eta);
    const auto [out0, out1] = *bypass.bypass_output;
    const Complex phase = out1 / beta;
    require(std::abs(std::abs(phase) - 1.0) < 1e-10, "bypass output is not norm-preserving");
    require(std::abs(out0 - phase * alpha * std::polar(1.0, eta)) < 1e-10,
            "bypass output deviates from the dephased input beyond 1e-10");
  }
  const std::vector<double> zero{0.0};
  const auto sweep =
      railswap::mismatch_sweep(GateSettings::swap_preset(), zero, GateTarget::Swap);
  require(std::abs(sweep[0].fidelity - 1.0) <= 1e-10, "fidelity at zero mismatch is not 1");
}

void criterion_routing() {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const railswap::SwapNetwork net = railswap::synthesize(perm);
      require(railswap::apply_network(net) == perm, "network does not realize the permutation");
      require(net.swap_count() == testsupport::inversion_count(perm),
              "swap count is not the inversion count");
      require(net.depth() <= n, "depth exceeds the qubit count");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::mt19937 rng(1009);
  for (int n : {6, 7}) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 200; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const railswap::SwapNetwork net = railswap::synthesize(perm);
      require(railswap::apply_network(net) == perm, "network does not realize the permutation");
      require(net.swap_count() == testsupport::inversion_count(perm),
              "swap count is not the inversion count");
    }
  }
  require(railswap::synthesize(std::vector<int>{3, 2, 1, 0}).swap_count() == 6,
          "four-qubit reversal does not cost six swaps");

  const railswap::SwapNetwork reversal = railswap::synthesize(std::vector<int>{2, 1, 0});
  const DualRailRegister reg = DualRailRegister::consecutive(3);
  const auto lm =
      railswap::logical_matrix(railswap::emit_netlist(reversal, GateTarget::Swap), reg);
  ComplexMatrix expected(8, 8);
  for (int j = 0; j < 8; ++j) {
    const int reversed = ((j & 1) << 2) | (j & 2) | ((j >> 2) & 1);
    expected(reversed, j) = 1.0;
  }
  require(railswap::max_abs_diff(lm.matrix, expected) < 1e-10,
          "three-qubit reversal deviates from the permutation matrix beyond 1e-10");
}

void criterion_loss_constants() {
  const auto report = railswap::overhead_report(0.03, 2);
  require(std::abs(report.transmittance_per_crossing - 0.993116) <= 1e-6,
          "transmittance at 0.03 dB off by more than 1e-6");
  require(report.cnot_baseline_success == 1.0 / 4096.0,
          "heralded baseline is not exactly 1/4096");
}

void criterion_cli_determinism() {
  require(!g_cli.empty() && !g_goldens.empty(), "binary or goldens path not supplied");
  const struct {
    const char* args;
    const char* golden;
  } cases[] = {
      {"gate --mode swap", "gate_swap.txt"},
      {"sweep --eta-from 0 --eta-to 3.141592653589793 --steps 5 --target swap",
       "sweep_swap_5.txt"},
      {"route --perm 3,2,1,0", "route_reversal4.txt"},
      {"measure-demo --alpha 0.547722557505,0 --beta 0.836660026534,0 --mode measure "
       "--eta 1.0",
       "measure_demo.txt"},
  };
  for (const auto& c : cases) {
    const auto result = testsupport::run_command(g_cli + " " + c.args);
    require(result.exit_code == 0, std::string("nonzero exit for: ") + c.args);
    require(result.output == testsupport::read_file(g_goldens + "/" + std::string(c.golden)),
            std::string("output differs from golden ") + c.golden);
  }
  const auto parse_error = testsupport::run_command(
      "printf 'modes 2\\nwc 1 5\\n' > /tmp/railswap_acceptance.net && " + g_cli +
      " simulate /tmp/railswap_acceptance.net --input fock:1,1 2>&1");
  require(parse_error.exit_code == 2, "netlist parse error did not exit with 2");
  require(parse_error.output == "error: line 2: mode 5 exceeds declared width 2\n",
          "parse diagnostic differs from the documented message");
  require(testsupport::run_command(g_cli + " gate --mode sideways 2>/dev/null").exit_code == 1,
          "usage error did not exit with 1");
}

struct Criterion {
  std::string name;
  std::function<void()> body;
  double time_limit_seconds;  // 0 = untimed
};

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 3) {
    g_cli = argv[1];
    g_goldens = argv[2];
  }

  const std::vector<Criterion> criteria{
      {"swap-correctness", criterion_swap_correctness, 1.0},
      {"identity-correctness", criterion_identity_correctness, 0.0},
      {"product-state-action", criterion_product_state_action, 0.0},
      {"rbs-consistency", criterion_rbs_consistency, 0.0},
      {"crossing-involution", criterion_crossing_involution, 0.0},
      {"permanent-oracle", criterion_permanent_oracle, 0.0},
      {"fock-evolution-oracle", criterion_fock_evolution_oracle, 0.0},
      {"measurement-invariance", criterion_measurement_invariance, 0.0},
      {"routing", criterion_routing, 30.0},
      {"loss-constants", criterion_loss_constants, 0.0},
      {"cli-determinism", criterion_cli_determinism, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && c.time_limit_seconds > 0.0 && elapsed > c.time_limit_seconds) {
      failure = "exceeded the " + std::to_string(c.time_limit_seconds) + " s budget";
    }
    if (failure.empty()) {
      std::printf("PASS %2zu %-24s (%.3f s)\n", i + 1, c.name.c_str(), elapsed);
    } else {
      std::printf("FAIL %2zu %-24s (%.3f s): %s\n", i + 1, c.name.c_str(), elapsed,
                  failure.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
