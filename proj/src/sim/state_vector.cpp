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

#include <cmath>
#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, 0.0) {
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw InvalidArgument("state vector needs 2^n amplitudes");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply(const Gate& gate) {
  if (!is_unitary(gate.kind()) || gate.condition()) {
    throw UnsupportedOperation("'" + to_string(gate) +
                               "' is not supported in statevector mode");
  }
  for (Qubit q : gate.qubits()) {
    if (q >= n_qubits_) throw InvalidArgument("gate qubit out of range");
  }
  const auto m = gate_matrix(gate);
  if (const auto* m2 = std::get_if<Mat2>(&m)) {
    kernels::apply_1q(amps_, gate.qubit(0), *m2);
  } else {
    kernels::apply_2q(amps_, gate.qubit(0), gate.qubit(1), std::get<Mat4>(m));
  }
}

}  // namespace vtqg
