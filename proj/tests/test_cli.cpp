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

// Golden-file tests for the command line tool. Invoked by ctest as
//   test_cli <path-to-railswap-binary> <goldens-directory>

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "support/cli_runner.hpp"

namespace {
std::string g_cli;
std::string g_goldens;
}  // namespace

using testsupport::run_command;

static void check_golden(const std::string& args, const std::string& golden_name) {
  const testsupport::CommandResult result = run_command(g_cli + " " + args);
  CHECK(result.exit_code == 0);
  CHECK(result.output == testsupport::read_file(g_goldens + "/" + golden_name));
}

TEST_CASE("reports are byte-identical to the goldens") {
  check_golden("gate --mode swap", "gate_swap.txt");
  check_golden("gate --mode identity", "gate_identity.txt");
  check_golden("gate --mode swap --crossing mzi", "gate_swap_mzi.txt");
  check_golden("gate --mode swap --eta 0.7", "gate_swap_eta.txt");
  check_golden("sweep --eta-from 0 --eta-to 3.141592653589793 --steps 5 --target swap",
               "sweep_swap_5.txt");
  check_golden("route --perm 3,2,1,0", "route_reversal4.txt");
  check_golden("route --perm 3,2,1,0 --loss-db 0.02", "route_reversal4_loss.txt");
  check_golden("route --perm 0,1,2", "route_identity3.txt");
  check_golden("measure-demo --alpha 0.547722557505,0 --beta 0.836660026534,0 "
               "--mode measure --eta 1.0",
               "measure_demo.txt");
  check_golden("measure-demo --alpha 0.8,0 --beta 0.6,0 --mode bypass --eta 0.7",
               "measure_bypass.txt");
  check_golden("measure-demo --alpha 0.8,0 --beta 0.6,0 --mode measure --shots 1000 --seed 42",
               "measure_sampled.txt");
  check_golden("simulate " + g_goldens + "/hom.net --input fock:1,1", "simulate_hom.txt");
  check_golden("simulate " + g_goldens + "/swap_tile.net --input 'qubits:1,0;0,0;0,0;0,0'",
               "simulate_qubits.txt");
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmd = g_cli + " sweep --eta-from 0 --eta-to 1 --steps 7 --target identity";
  CHECK(run_command(cmd).output == run_command(cmd).output);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_command(g_cli + " 2>/dev/null").exit_code == 1);
  CHECK(run_command(g_cli + " gate --mode sideways 2>/dev/null").exit_code == 1);
  CHECK(run_command(g_cli + " nonsense 2>/dev/null").exit_code == 1);
  CHECK(run_command(g_cli + " measure-demo --alpha bogus --beta 0,0 2>/dev/null").exit_code == 1);
  CHECK(run_command(g_cli + " simulate " + g_goldens + "/hom.net --input bogus:1 2>/dev/null")
            .exit_code == 1);
  CHECK(run_command(g_cli + " route --perm 1,x 2>/dev/null").exit_code == 1);
}

TEST_CASE("domain errors exit with 2 and a one-line diagnostic") {
  const testsupport::CommandResult bad_mode = run_command(
      "printf 'modes 2\\nwc 1 5\\n' > /tmp/railswap_bad.net && " + g_cli +
      " simulate /tmp/railswap_bad.net --input fock:1,1 2>&1");
  CHECK(bad_mode.exit_code == 2);
  CHECK(bad_mode.output == "error: line 2: mode 5 exceeds declared width 2\n");

  CHECK(run_command(g_cli + " simulate /nonexistent.net --input fock:1 2>/dev/null").exit_code ==
        2);
  CHECK(run_command(g_cli + " route --perm 0,0 2>/dev/null").exit_code == 2);
  CHECK(run_command(g_cli + " measure-demo --alpha 1,0 --beta 1,0 2>/dev/null").exit_code == 2);
  CHECK(run_command(g_cli + " simulate " + g_goldens + "/hom.net --input fock:1,1,1 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_command(g_cli + " --help >/dev/null 2>&1").exit_code == 0);
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: test_cli <railswap-binary> <goldens-dir>\n");
    return 1;
  }
  g_cli = argv[1];
  g_goldens = argv[2];
  doctest::Context context;
  context.applyCommandLine(1, argv);
  return context.run();
}
