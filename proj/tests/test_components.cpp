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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "railswap/components.hpp"
#include "railswap/error.hpp"
#include "support/oracles.hpp"

using railswap::Complex;
using railswap::ComplexMatrix;
using railswap::Component;
using railswap::Circuit;
using railswap::Error;
using std::numbers::pi;

namespace {
const ComplexMatrix kPauliX = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

TEST_CASE("phase shifter matrix") {
  CHECK(railswap::u_phase_shifter(0.0) == ComplexMatrix::identity(1));
  CHECK(std::abs(railswap::u_phase_shifter(pi)(0, 0) - Complex{-1.0}) < 1e-15);
  CHECK(std::abs(railswap::u_phase_shifter(pi / 2)(0, 0) - Complex(0, 1)) < 1e-15);
}

TEST_CASE("directional coupler matrix") {
  CHECK(railswap::u_directional_coupler(1.0) == ComplexMatrix::identity(2));

  const ComplexMatrix full_cross = railswap::u_directional_coupler(0.0);
  CHECK(full_cross(0, 0) == Complex{0.0});
  CHECK(full_cross(0, 1) == Complex(0, 1));

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix balanced = railswap::u_directional_coupler(0.5);
  CHECK(railswap::max_abs_diff(
            balanced, ComplexMatrix::from_rows({{s, Complex(0, s)}, {Complex(0, s), s}})) <
        1e-15);

  CHECK_THROWS_AS(railswap::u_directional_coupler(-0.1), Error);
  CHECK_THROWS_AS(railswap::u_directional_coupler(1.1), Error);
}

TEST_CASE("mzi closed form follows from the coupler product") {
  SUBCASE("theta=0 is the crossing up to phase i") {
    CHECK(railswap::max_abs_diff(railswap::u_mzi(0.0), railswap::scale(Complex(0, 1), kPauliX)) <
          1e-15);
    CHECK(railswap::equal_up_to_global_phase(railswap::u_mzi(0.0), railswap::u_crossing(),
                                             1e-12));
  }
  SUBCASE("theta=pi is -diag(1,-1)") {
    CHECK(railswap::max_abs_diff(railswap::u_mzi(pi),
                                 ComplexMatrix::from_rows({{-1, 0}, {0, 1}})) < 1e-15);
  }
  SUBCASE("matches the explicit three-factor product") {
    const ComplexMatrix coupler = railswap::u_directional_coupler(0.5);
    for (double theta : {0.0, 0.3, 1.1, pi / 2, 2.7, pi}) {
      const ComplexMatrix inner =
          ComplexMatrix::from_rows({{std::polar(1.0, theta), 0}, {0, 1}});
      const ComplexMatrix product = coupler * inner * coupler;
      CHECK(railswap::max_abs_diff(railswap::u_mzi(theta), product) < 1e-14);
    }
  }
}

TEST_CASE("rbs canonical matrix") {
  CHECK(railswap::max_abs_diff(railswap::u_rbs(0.0, 0.0), kPauliX) == 0.0);
  CHECK(railswap::max_abs_diff(railswap::u_rbs(pi, pi), ComplexMatrix::identity(2)) < 1e-15);

  const double s = std::sqrt(2.0) / 2.0;
  CHECK(railswap::max_abs_diff(railswap::u_rbs(pi / 2, 0.0),
                               ComplexMatrix::from_rows({{s, s}, {s, -s}})) < 1e-15);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int i = 0; i < 100; ++i) {
    CHECK(railswap::is_unitary(railswap::u_rbs(angle(rng), angle(rng)), 1e-12));
  }
}

TEST_CASE("physical mzi plus external shifter equals the canonical rbs up to phase") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int i = 0; i < 100; ++i) {
    const double theta = angle(rng);
    const double phi = angle(rng);
    // Shifter on the second (lower) mode, applied after the MZI.
    const ComplexMatrix shifter = ComplexMatrix::from_rows({{1, 0}, {0, std::polar(1.0, phi)}});
    const ComplexMatrix physical = shifter * railswap::u_mzi(theta);
    CHECK(railswap::equal_up_to_global_phase(physical, railswap::u_rbs(theta, phi), 1e-12));
  }
}

TEST_CASE("crossing is an exact involution") {
  CHECK(railswap::u_crossing() == kPauliX);
  CHECK(railswap::u_crossing() * railswap::u_crossing() == ComplexMatrix::identity(2));
}

TEST_CASE("component factories validate inputs") {
  CHECK_THROWS_AS(Component::directional_coupler(0, 1, 1.5), Error);
  CHECK_THROWS_AS(Component::phase_shifter(0, 0.5, -0.1), Error);
  CHECK_THROWS_AS(Component::crossing(1, 1), Error);
  CHECK_THROWS_AS(Component::rbs(0, 0, 0.0, 0.0), Error);
  CHECK(Component::mzi(0, 1, 0.4).mode_count() == 2);
  CHECK(Component::phase_shifter(2, 0.4).mode_count() == 1);
}

TEST_CASE("circuit add validates mode range") {
  Circuit c(2);
  c.add(Component::crossing(0, 1));
  CHECK_THROWS_AS(c.add(Component::crossing(1, 2)), Error);
  CHECK_THROWS_AS(Circuit(0), Error);

  Circuit other(2);
  other.add(Component::phase_shifter(0, 0.3));
  c.append(other);
  CHECK(c.elements().size() == 2);
  CHECK_THROWS_AS(c.append(Circuit(3)), Error);
}

TEST_CASE("embed places local blocks") {
  const int modes12[] = {1, 2};
  const ComplexMatrix embedded = railswap::embed(kPauliX, modes12, 4);
  CHECK(embedded(0, 0) == Complex{1.0});
  CHECK(embedded(3, 3) == Complex{1.0});
  CHECK(embedded(1, 2) == Complex{1.0});
  CHECK(embedded(1, 1) == Complex{0.0});

  const int mode3[] = {3};
  const ComplexMatrix shifted = railswap::embed(railswap::u_phase_shifter(0.7), mode3, 4);
  CHECK(shifted(3, 3) == std::polar(1.0, 0.7));
  CHECK(shifted(0, 0) == Complex{1.0});

  const int pair[] = {0, 2};
  CHECK(railswap::embed(ComplexMatrix::identity(2), pair, 5) == ComplexMatrix::identity(5));

  SUBCASE("non-adjacent pairs work") {
    const ComplexMatrix wide = railswap::embed(kPauliX, pair, 3);
    CHECK(wide(0, 2) == Complex{1.0});
    CHECK(wide(2, 0) == Complex{1.0});
    CHECK(wide(1, 1) == Complex{1.0});
  }
  SUBCASE("bad indices throw") {
    const int dup[] = {1, 1};
    CHECK_THROWS_AS(railswap::embed(kPauliX, dup, 4), Error);
    const int outside[] = {3, 4};
    CHECK_THROWS_AS(railswap::embed(kPauliX, outside, 4), Error);
  }
}

TEST_CASE("compile multiplies elements in propagation order") {
  SUBCASE("double crossing cancels") {
    Circuit c(4);
    c.add(Component::crossing(1, 2));
    c.add(Component::crossing(1, 2));
    CHECK(railswap::max_abs_diff(railswap::compile(c).unitary, ComplexMatrix::identity(4)) <
          1e-12);
  }
  SUBCASE("identity-preset rbs compiles to I") {
    Circuit c(4);
    c.add(Component::rbs(1, 2, pi, pi));
    CHECK(railswap::max_abs_diff(railswap::compile(c).unitary, ComplexMatrix::identity(4)) <
          1e-12);
  }
  SUBCASE("full swap tile gives the expected mode permutation") {
    Circuit c(4);
    c.add(Component::crossing(1, 2));
    c.add(Component::rbs(0, 1, 0.0, 0.0));
    c.add(Component::rbs(2, 3, 0.0, 0.0));
    c.add(Component::crossing(1, 2));
    // Modes map (0,1,2,3) -> (2,3,0,1): column j carries a 1 in row image(j).
    ComplexMatrix expected(4, 4);
    expected(2, 0) = expected(3, 1) = expected(0, 2) = expected(1, 3) = 1.0;
    CHECK(railswap::max_abs_diff(railswap::compile(c).unitary, expected) < 1e-12);
  }
  SUBCASE("single component compiles to its embedding") {
    const Component ps = Component::phase_shifter(1, 0.9);
    Circuit c(3);
    c.add(ps);
    const int mode[] = {1};
    CHECK(railswap::compile(c).unitary ==
          railswap::embed(railswap::component_unitary(ps), mode, 3));
  }
  SUBCASE("order sensitivity: reversed netlist equals reversed product") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    for (int rep = 0; rep < 20; ++rep) {
      Circuit forward(3);
      forward.add(Component::rbs(0, 1, angle(rng), angle(rng)));
      forward.add(Component::phase_shifter(2, angle(rng)));
      forward.add(Component::rbs(1, 2, angle(rng), angle(rng)));

      Circuit reversed(3);
      const auto& elems = forward.elements();
      for (auto it = elems.rbegin(); it != elems.rend(); ++it) reversed.add(*it);

      ComplexMatrix product = ComplexMatrix::identity(3);
      for (const Component& comp : forward.elements()) {
        const ComplexMatrix u = railswap::compile(Circuit(3).add(comp)).unitary;
        product = product * u;  // reversed application order
      }
      CHECK(railswap::max_abs_diff(railswap::compile(reversed).unitary, product) < 1e-12);
    }
  }
  SUBCASE("lossless circuits compile to unitaries") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    for (int rep = 0; rep < 20; ++rep) {
      Circuit c(4);
      c.add(Component::rbs(0, 1, angle(rng), angle(rng)));
      c.add(Component::mzi(1, 2, angle(rng)));
      c.add(Component::directional_coupler(2, 3, 0.5));
      c.add(Component::phase_shifter(0, angle(rng)));
      const railswap::CompiledCircuit compiled = railswap::compile(c);
      CHECK(railswap::is_unitary(compiled.unitary, 1e-12));
      CHECK(compiled.lossless());
    }
  }
}

TEST_CASE("loss annotations accumulate per mode") {
  Circuit c(3);
  c.add(Component::crossing(0, 1, 0.3));
  c.add(Component::phase_shifter(0, 0.0, 0.2));
  const railswap::CompiledCircuit compiled = railswap::compile(c);
  CHECK_FALSE(compiled.lossless());
  // Unitary part ignores loss entirely.
  CHECK(railswap::is_unitary(compiled.unitary, 1e-12));
  CHECK(compiled.mode_amplitude_factor[0] ==
        doctest::Approx(std::sqrt(std::pow(10.0, -0.5 / 10.0))).epsilon(1e-12));
  CHECK(compiled.mode_amplitude_factor[1] ==
        doctest::Approx(std::sqrt(std::pow(10.0, -0.3 / 10.0))).epsilon(1e-12));
  CHECK(compiled.mode_amplitude_factor[2] == 1.0);
}
