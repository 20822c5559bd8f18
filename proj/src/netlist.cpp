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

#include "railswap/netlist.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "railswap/error.hpp"

namespace railswap {

namespace {

struct DirectiveShape {
  const char* name;
  ComponentKind kind;
  int modes;
  int params;
};

constexpr DirectiveShape kShapes[] = {
    {"ps", ComponentKind::PhaseShifter, 1, 1},
    {"dc", ComponentKind::DirectionalCoupler, 2, 1},
    {"mzi", ComponentKind::Mzi, 2, 1},
    {"rbs", ComponentKind::Rbs, 2, 2},
    {"wc", ComponentKind::Crossing, 2, 0},
};

const DirectiveShape* find_shape(const std::string& name) {
  for (const auto& shape : kShapes) {
    if (name == shape.name) return &shape;
  }
  return nullptr;
}

long parse_int(const std::string& tok, int line, const char* what) {
  char* end = nullptr;
  errno = 0;
  const long value = std::strtol(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

double parse_real(const std::string& tok, int line, const char* what) {
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

int parse_mode(const std::string& tok, int line, int width) {
  const long mode = parse_int(tok, line, "mode");
  if (mode < 1) {
    throw ParseError(line, "mode " + tok + " out of range (modes are 1-based)");
  }
  if (mode > width) {
    throw ParseError(line, "mode " + tok + " exceeds declared width " + std::to_string(width));
  }
  return static_cast<int>(mode - 1);
}

Component make_component(const DirectiveShape& shape, const int* modes, const double* params,
                         double loss_db) {
  switch (shape.kind) {
    case ComponentKind::PhaseShifter:
      return Component::phase_shifter(modes[0], params[0], loss_db);
    case ComponentKind::DirectionalCoupler:
      return Component::directional_coupler(modes[0], modes[1], params[0], loss_db);
    case ComponentKind::Mzi:
      return Component::mzi(modes[0], modes[1], params[0], loss_db);
    case ComponentKind::Rbs:
      return Component::rbs(modes[0], modes[1], params[0], params[1], loss_db);
    case ComponentKind::Crossing:
      return Component::crossing(modes[0], modes[1], loss_db);
  }
  throw Error("unreachable component kind");
}

const char* directive_name(ComponentKind kind) {
  for (const auto& shape : kShapes) {
    if (shape.kind == kind) return shape.name;
  }
  throw Error("unreachable component kind");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

NetlistDocument parse_netlist(std::string_view text) {
  NetlistDocument doc;
  bool have_width = false;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string tok; words >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;

    const std::string& name = tokens.front();
    if (!have_width) {
      if (name != "modes") {
        throw ParseError(line_no, "expected 'modes' header before '" + name + "'");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_no, "'modes' takes 1 argument, got " +
                                      std::to_string(tokens.size() - 1));
      }
      const long width = parse_int(tokens[1], line_no, "mode count");
      if (width < 1) throw ParseError(line_no, "invalid mode count '" + tokens[1] + "'");
      doc.width = static_cast<int>(width);
      doc.width_line = line_no;
      have_width = true;
      continue;
    }
    if (name == "modes") throw ParseError(line_no, "duplicate 'modes' directive");

    const DirectiveShape* shape = find_shape(name);
    if (shape == nullptr) throw ParseError(line_no, "unknown directive '" + name + "'");

    const std::size_t fixed = static_cast<std::size_t>(shape->modes + shape->params);
    const std::size_t given = tokens.size() - 1;
    double loss_db = 0.0;
    if (given > fixed && tokens[1 + fixed] == "loss") {
      if (given != fixed + 2) throw ParseError(line_no, "'loss' takes exactly one value");
      loss_db = parse_real(tokens[2 + fixed], line_no, "loss");
    } else if (given != fixed) {
      throw ParseError(line_no, "'" + name + "' takes " + std::to_string(fixed) +
                                    " arguments, got " + std::to_string(given));
    }

    int modes[2] = {0, 0};
    for (int k = 0; k < shape->modes; ++k) {
      modes[k] = parse_mode(tokens[1 + k], line_no, doc.width);
    }
    if (shape->modes == 2 && modes[0] == modes[1]) {
      throw ParseError(line_no, "modes must be distinct, got " + tokens[1] + " and " + tokens[2]);
    }
    double params[2] = {0.0, 0.0};
    for (int k = 0; k < shape->params; ++k) {
      params[k] = parse_real(tokens[1 + shape->modes + k], line_no, "number");
    }

    try {
      doc.directives.push_back({line_no, make_component(*shape, modes, params, loss_db)});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }

  if (!have_width) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'modes' header");
  return doc;
}

Circuit to_circuit(const NetlistDocument& doc) {
  Circuit circuit(doc.width);
  for (const NetlistDirective& d : doc.directives) {
    try {
      circuit.add(d.component);
    } catch (const Error& e) {
      throw ParseError(d.line, e.what());
    }
  }
  return circuit;
}

Circuit parse_circuit(std::string_view text) { return to_circuit(parse_netlist(text)); }

std::string write_netlist(const Circuit& circuit) {
  std::string out = "modes " + std::to_string(circuit.width()) + "\n";
  for (const Component& c : circuit.elements()) {
    const DirectiveShape* shape = find_shape(directive_name(c.kind));
    out += shape->name;
    out += ' ' + std::to_string(c.mode_a + 1);
    if (shape->modes == 2) out += ' ' + std::to_string(c.mode_b + 1);
    if (shape->params >= 1) out += ' ' + format_real(c.param_a);
    if (shape->params >= 2) out += ' ' + format_real(c.param_b);
    if (c.loss_db != 0.0) out += " loss " + format_real(c.loss_db);
    out += '\n';
  }
  return out;
}

}  // namespace railswap
