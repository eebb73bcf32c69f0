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

#include "vtqg/decompose.hpp"

namespace vtqg {

std::vector<Gate> decompose_rzz_cnot(double theta, Qubit a, Qubit b) {
  return {Gate::cnot(a, b), Gate::rz(b, theta), Gate::cnot(a, b)};
}

std::vector<Gate> decompose_rzz_rzx(double theta, Qubit a, Qubit b) {
  // H X H = Z on the target turns Z(x)X into Z(x)Z.
  return {Gate::h(b), Gate::rzx(a, b, theta, /*pulse_efficient=*/true), Gate::h(b)};
}

Circuit lower_rzz(const Circuit& circuit, RzzLowering lowering) {
  Circuit out(circuit.n_qubits(), circuit.n_clbits());
  for (const Gate& g : circuit) {
    if (g.kind() != GateKind::RZZ || lowering == RzzLowering::Keep) {
      out.append(g);
      continue;
    }
    auto seq = lowering == RzzLowering::Cnot
                   ? decompose_rzz_cnot(g.angle(), g.qubit(0), g.qubit(1))
                   : decompose_rzz_rzx(g.angle(), g.qubit(0), g.qubit(1));
    for (auto& s : seq) {
      out.append(g.condition() ? s.controlled_by(*g.condition()) : s);
    }
  }
  for (Clbit b : circuit.sign_bits()) out.mark_sign_bit(b);
  return out;
}

}  // namespace vtqg
