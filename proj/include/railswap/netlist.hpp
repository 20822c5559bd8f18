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

#include <string>
#include <string_view>
#include <vector>

#include "railswap/components.hpp"

namespace railswap {

/// Line-oriented circuit description. One directive per line, tokens split
/// on whitespace, `#` starts a comment. The first directive must be
/// `modes N`; component directives are
///
///   ps  <mode> <phi>
///   dc  <i> <j> <eta>
///   mzi <i> <j> <theta>
///   rbs <i> <j> <theta> <phi>
///   wc  <i> <j>
///
/// with an optional trailing `loss <dB>` on any component line. Modes are
/// 1-based in the file and 0-based in memory.
struct NetlistDirective {
  int line = 0;  // 1-based source line, for diagnostics
  Component component;
};

struct NetlistDocument {
  int width = 0;
  int width_line = 0;
  std::vector<NetlistDirective> directives;
};

/// Throws ParseError (message prefixed "line N:") on unknown directives,
/// arity mistakes, malformed numbers, out-of-range or repeated modes, and a
/// missing `modes` header.
NetlistDocument parse_netlist(std::string_view text);

Circuit to_circuit(const NetlistDocument& doc);

/// parse_netlist followed by to_circuit.
Circuit parse_circuit(std::string_view text);

/// Inverse of parsing: emits a document that parses back to an identical
/// circuit. Angles and losses print with enough digits to round-trip
/// exactly.
std::string write_netlist(const Circuit& circuit);

}  // namespace railswap
