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

#include "vtqg/circuit.hpp"

#include <algorithm>
#include <string>

#include "vtqg/errors.hpp"

namespace vtqg {

Circuit::Circuit(std::size_t n_qubits, std::size_t n_clbits)
    : n_qubits_(n_qubits), n_clbits_(n_clbits), written_(n_clbits, false) {
  if (n_qubits == 0) throw InvalidArgument("circuit needs at least one qubit");
}

Circuit& Circuit::append(const Gate& gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= n_qubits_) {
      throw InvalidCircuit("qubit " + std::to_string(q) + " out of range in '" +
                           to_string(gate) + "' (n_qubits=" +
                           std::to_string(n_qubits_) + ")");
    }
  }
  if (auto c = gate.condition()) {
    if (*c >= n_clbits_) {
      throw InvalidCircuit("classical bit " + std::to_string(*c) +
                           " out of range in '" + to_string(gate) + "'");
    }
    if (!written_[*c]) {
      throw InvalidCircuit("'" + to_string(gate) +
                           "' is controlled by a bit no earlier measurement wrote");
    }
  }
  if (auto t = gate.target_bit()) {
    if (*t >= n_clbits_) {
      throw InvalidCircuit("classical bit " + std::to_string(*t) +
                           " out of range in '" + to_string(gate) + "'");
    }
    written_[*t] = true;
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
  return *this;
}

Clbit Circuit::add_clbit() {
  written_.push_back(false);
  return n_clbits_++;
}

Circuit& Circuit::mark_sign_bit(Clbit bit) {
  if (bit >= n_clbits_) {
    throw InvalidCircuit("sign bit " + std::to_string(bit) + " out of range");
  }
  if (std::find(sign_bits_.begin(), sign_bits_.end(), bit) == sign_bits_.end()) {
    sign_bits_.push_back(bit);
  }
  return *this;
}

bool Circuit::has_nonunitary() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) {
    return !is_unitary(g.kind()) || g.condition().has_value();
  });
}

bool Circuit::bit_written(Clbit bit) const {
  return bit < written_.size() && written_[bit];
}

std::size_t GateCounts::operator[](GateKind kind) const {
  auto it = by_kind.find(kind);
  return it == by_kind.end() ? 0 : it->second;
}

std::size_t GateCounts::two_qubit_tally() const {
  return (*this)[GateKind::CNOT] + (*this)[GateKind::RZX] +
         cnot_equivalents_from_swaps + 2 * (*this)[GateKind::RZZ];
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  for (GateKind k : kAllGateKinds) counts.by_kind[k] = 0;
  for (const Gate& g : circuit) {
    ++counts.by_kind[g.kind()];
    if (g.condition()) ++counts.classically_controlled;
  }
  counts.cnot_equivalents_from_swaps = 3 * counts.by_kind[GateKind::SWAP];
  return counts;
}

}  // namespace vtqg
