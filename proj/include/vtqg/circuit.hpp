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

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "vtqg/gate.hpp"

namespace vtqg {

/// Ordered gate list over logical qubits, plus a classical register.
///
/// Every append is validated: qubit and bit indices must be in range and a
/// classically controlled gate must reference a bit already written by an
/// earlier MEASURE_Z. Bits listed in `sign_bits()` carry a quasi-probability
/// sign: a shot whose sign bit reads 1 contributes with a factor of -1.
class Circuit {
 public:
  using const_iterator = std::vector<Gate>::const_iterator;

  explicit Circuit(std::size_t n_qubits, std::size_t n_clbits = 0);

  Circuit& append(const Gate& gate);
  Circuit& append(std::span<const Gate> gates);

  /// Grows the classical register by one bit and returns its index.
  Clbit add_clbit();
  Circuit& mark_sign_bit(Clbit bit);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t n_clbits() const { return n_clbits_; }
  std::span<const Gate> gates() const { return gates_; }
  const std::vector<Clbit>& sign_bits() const { return sign_bits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }
  const_iterator begin() const { return gates_.begin(); }
  const_iterator end() const { return gates_.end(); }

  /// Any measurement, reset or classically controlled gate present.
  bool has_nonunitary() const;
  /// True once some earlier MEASURE_Z has written `bit`.
  bool bit_written(Clbit bit) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_qubits_;
  std::size_t n_clbits_;
  std::vector<Gate> gates_;
  std::vector<Clbit> sign_bits_;
  std::vector<bool> written_;
};

/// Tally of a circuit's gates by kind.
struct GateCounts {
  std::map<GateKind, std::size_t> by_kind;
  std::size_t classically_controlled = 0;
  /// Each SWAP is three CNOTs on hardware.
  std::size_t cnot_equivalents_from_swaps = 0;

  std::size_t operator[](GateKind kind) const;
  /// Native two-qubit interactions after lowering: CNOT and RZX count once,
  /// SWAP three times, an uncompiled RZZ twice.
  std::size_t two_qubit_tally() const;
};

GateCounts count_gates(const Circuit& circuit);

}  // namespace vtqg
