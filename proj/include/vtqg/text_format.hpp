// Copyright 2026 The vtqg Authors
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

#include <iosfwd>
#include <string>
#include <string_view>

#include "vtqg/circuit.hpp"

namespace vtqg {

/// Line-oriented circuit text.
///
///     qubits 4
///     clbits 1
///     sign 0
///     RX 0 0.786
///     RZZ 0,1 -0.787
///     RZX 0,1 0.787 pet
///     MEASURE_Z 0 -> 0
///     X 1 if 0
///
/// Header lines (`qubits`, `clbits`, `sign`) come first; `qubits` is
/// required. Then one gate per line: `KIND q0[,q1] [angle] [pet] [-> bit]
/// [if bit]`. `#` starts a comment. Angles are written with 17 significant
/// digits so a write/parse cycle is lossless.
std::string to_text(const Circuit& circuit);
void write_text(std::ostream& os, const Circuit& circuit);

/// Throws InvalidArgument (with a line number) on malformed input and
/// InvalidCircuit when a gate breaks a circuit invariant.
Circuit parse_circuit(std::string_view text);

}  // namespace vtqg
