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

#include "vtqg/routing.hpp"

#include <string>

#include "vtqg/errors.hpp"

namespace vtqg {

RingClosureRouting route_ring_closure(std::size_t n_qubits,
                                      const CouplingMap& coupling, double theta) {
  if (n_qubits < 2) throw InvalidArgument("ring closure needs at least 2 qubits");
  if (coupling.n_physical() != n_qubits) {
    throw UnsupportedTopology("coupling map has " +
                              std::to_string(coupling.n_physical()) +
                              " physical qubits, expected a path of " +
                              std::to_string(n_qubits));
  }
  auto order = coupling.path_order();
  if (!order) throw UnsupportedTopology("coupling map is not a simple path");

  const auto& path = *order;
  Layout initial(path);
  Layout layout = initial;
  Circuit circuit(n_qubits);

  // Left endpoint walks right `left_moves` steps, right endpoint walks left
  // for the remainder, so they meet at path positions (left_moves,
  // left_moves + 1).
  const std::size_t total = n_qubits - 2;
  const std::size_t left_moves = total / 2;
  const std::size_t right_moves = total - left_moves;
  for (std::size_t k = 0; k < left_moves; ++k) {
    circuit.append(Gate::swap(path[k], path[k + 1]));
    layout.swap_physical(path[k], path[k + 1]);
  }
  for (std::size_t k = 0; k < right_moves; ++k) {
    const std::size_t hi = n_qubits - 1 - k;
    circuit.append(Gate::swap(path[hi - 1], path[hi]));
    layout.swap_physical(path[hi - 1], path[hi]);
  }
  circuit.append(Gate::rzz(layout.physical(0), layout.physical(n_qubits - 1), theta));
  return {std::move(circuit), std::move(initial), std::move(layout), total};
}

}  // namespace vtqg
