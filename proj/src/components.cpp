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

#include "railswap/components.hpp"

#include <array>
#include <cmath>
#include <string>

#include "railswap/error.hpp"

namespace railswap {

namespace {

void check_angle(double value, const char* what) {
  if (!std::isfinite(value)) throw Error(std::string(what) + " must be finite");
}

void check_loss(double loss_db) {
  if (!std::isfinite(loss_db) || loss_db < 0.0) throw Error("loss_db must be >= 0");
}

void check_pair(int a, int b) {
  if (a == b) throw Error("component modes must be distinct, got " + std::to_string(a) + " twice");
  if (a < 0 || b < 0) throw Error("component modes must be non-negative");
}

}  // namespace

Component Component::phase_shifter(int mode, double phi, double loss_db) {
  check_angle(phi, "phi");
  check_loss(loss_db);
  if (mode < 0) throw Error("component modes must be non-negative");
  return Component{ComponentKind::PhaseShifter, mode, -1, phi, 0.0, loss_db};
}

Component Component::directional_coupler(int a, int b, double eta_c, double loss_db) {
  check_pair(a, b);
  check_loss(loss_db);
  if (!std::isfinite(eta_c) || eta_c < 0.0 || eta_c > 1.0) {
    throw Error("directional coupler eta_c must lie in [0, 1], got " + std::to_string(eta_c));
  }
  return Component{ComponentKind::DirectionalCoupler, a, b, eta_c, 0.0, loss_db};
}

Component Component::mzi(int a, int b, double theta, double loss_db) {
  check_pair(a, b);
  check_angle(theta, "theta");
  check_loss(loss_db);
  return Component{ComponentKind::Mzi, a, b, theta, 0.0, loss_db};
}

Component Component::rbs(int a, int b, double theta, double phi, double loss_db) {
  check_pair(a, b);
  check_angle(theta, "theta");
  check_angle(phi, "phi");
  check_loss(loss_db);
  return Component{ComponentKind::Rbs, a, b, theta, phi, loss_db};
}

Component Component::crossing(int a, int b, double loss_db) {
  check_pair(a, b);
  check_loss(loss_db);
  return Component{ComponentKind::Crossing, a, b, 0.0, 0.0, loss_db};
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw Error("circuit width must be >= 1, got " + std::to_string(width));
}

Circuit& Circuit::add(Component c) {
  if (c.mode_a >= width_ || c.mode_b >= width_) {
    const int bad = c.mode_a >= width_ ? c.mode_a : c.mode_b;
    throw Error("component mode " + std::to_string(bad) + " out of range for width " +
                std::to_string(width_));
  }
  elements_.push_back(c);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    throw Error("cannot append circuit of width " + std::to_string(other.width_) +
                " to circuit of width " + std::to_string(width_));
  }
  elements_.insert(elements_.end(), other.elements_.begin(), other.elements_.end());
  return *this;
}

ComplexMatrix u_phase_shifter(double phi) {
  check_angle(phi, "phi");
  return ComplexMatrix(1, 1, {std::polar(1.0, phi)});
}

ComplexMatrix u_directional_coupler(double eta_c) {
  if (!std::isfinite(eta_c) || eta_c < 0.0 || eta_c > 1.0) {
    throw Error("directional coupler eta_c must lie in [0, 1], got " + std::to_string(eta_c));
  }
  const double t = std::sqrt(eta_c);
  const Complex cross(0.0, std::sqrt(1.0 - eta_c));
  return ComplexMatrix(2, 2, {Complex(t, 0.0), cross, cross, Complex(t, 0.0)});
}

ComplexMatrix u_mzi(double theta) {
  check_angle(theta, "theta");
  const ComplexMatrix coupler = u_directional_coupler(0.5);
  const ComplexMatrix internal(2, 2,
                               {std::polar(1.0, theta), Complex(0.0, 0.0), Complex(0.0, 0.0),
                                Complex(1.0, 0.0)});
  // First coupler applied first, so it sits rightmost in the product.
  return matmul(coupler, matmul(internal, coupler));
}

ComplexMatrix u_rbs(double theta, double phi) {
  check_angle(theta, "theta");
  check_angle(phi, "phi");
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  return ComplexMatrix(2, 2, {Complex(s, 0.0), Complex(c, 0.0), e * c, -e * s});
}

ComplexMatrix u_crossing() {
  return ComplexMatrix(2, 2,
                       {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0),
                        Complex(0.0, 0.0)});
}

ComplexMatrix component_unitary(const Component& c) {
  switch (c.kind) {
    case ComponentKind::PhaseShifter:
      return u_phase_shifter(c.param_a);
    case ComponentKind::DirectionalCoupler:
      return u_directional_coupler(c.param_a);
    case ComponentKind::Mzi:
      return u_mzi(c.param_a);
    case ComponentKind::Rbs:
      return u_rbs(c.param_a, c.param_b);
    case ComponentKind::Crossing:
      return u_crossing();
  }
  throw Error("unknown component kind");
}

ComplexMatrix embed(const ComplexMatrix& local, std::span<const int> modes, int width) {
  if (local.rows() != local.cols() || local.rows() != modes.size() ||
      (modes.size() != 1 && modes.size() != 2)) {
    throw Error("embed: local matrix must be 1x1 or 2x2 with one mode index per row");
  }
  for (const int m : modes) {
    if (m < 0 || m >= width) {
      throw Error("embed: mode " + std::to_string(m) + " out of range for width " +
                  std::to_string(width));
    }
  }
  if (modes.size() == 2 && modes[0] == modes[1]) {
    throw Error("embed: duplicate mode " + std::to_string(modes[0]));
  }
  ComplexMatrix out = ComplexMatrix::identity(static_cast<std::size_t>(width));
  for (std::size_t r = 0; r < modes.size(); ++r) {
    const auto row = static_cast<std::size_t>(modes[r]);
    out(row, row) = local(r, r);
    for (std::size_t c = 0; c < modes.size(); ++c) {
      out(row, static_cast<std::size_t>(modes[c])) = local(r, c);
    }
  }
  return out;
}

bool CompiledCircuit::lossless() const noexcept {
  for (const double f : mode_amplitude_factor) {
    if (f != 1.0) return false;
  }
  return true;
}

CompiledCircuit compile(const Circuit& circuit) {
  const int width = circuit.width();
  CompiledCircuit out{ComplexMatrix::identity(static_cast<std::size_t>(width)),
                      std::vector<double>(static_cast<std::size_t>(width), 1.0)};
  for (const Component& c : circuit.elements()) {
    std::array<int, 2> modes{c.mode_a, c.mode_b};
    const std::span<const int> used(modes.data(), static_cast<std::size_t>(c.mode_count()));
    out.unitary = matmul(embed(component_unitary(c), used, width), out.unitary);
    if (c.loss_db > 0.0) {
      const double factor = std::sqrt(std::pow(10.0, -c.loss_db / 10.0));
      for (const int m : used) out.mode_amplitude_factor[static_cast<std::size_t>(m)] *= factor;
    }
  }
  return out;
}

}  // namespace railswap
