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

#include "vtqg/circuit.hpp"
#include "vtqg/coupling.hpp"

namespace vtqg {

/// Output of routing the ring-closing RZZ between logical 0 and n-1.
struct RingClosureRouting {
  /// SWAP chain followed by the RZZ, on physical qubits.
  Circuit circuit;
  /// Where each logical qubit sits before the chain (path order).
  Layout initial;
  /// Where each logical qubit sits afterwards. Nothing is swapped back, so
  /// downstream readout must go through this layout.
  Layout final;
  std::size_t swap_count = 0;
};

/// Brings logical qubits 0 and n-1, placed at the two ends of a path
/// coupling map, next to each other by moving both towards the middle, then
/// applies RZZ(theta) to them. Emits max(n-2, 0) SWAPs.
///
/// Throws UnsupportedTopology unless `coupling` is a simple path over exactly
/// `n_qubits` physical qubits.
RingClosureRouting route_ring_closure(std::size_t n_qubits,
                                      const CouplingMap& coupling,
                                      double theta = 0.0);

}  // namespace vtqg
