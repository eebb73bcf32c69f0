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

#include <vector>

#include "vtqg/circuit.hpp"

namespace vtqg {

/// CNOT(a,b) RZ_b(theta) CNOT(a,b); equals RZZ(theta) exactly.
std::vector<Gate> decompose_rzz_cnot(double theta, Qubit a = 0, Qubit b = 1);

/// H_b RZX(a,b,theta) H_b with the RZX tagged pulse-efficient. Equals
/// RZZ(theta) exactly and uses one native two-qubit interaction.
std::vector<Gate> decompose_rzz_rzx(double theta, Qubit a = 0, Qubit b = 1);

enum class RzzLowering {
  Keep,
  Cnot,
  PulseEfficient,
};

/// Rewrites every RZZ in `circuit` with the chosen decomposition. Classical
/// conditions on an RZZ carry over to each emitted gate.
Circuit lower_rzz(const Circuit& circuit, RzzLowering lowering);

}  // namespace vtqg
