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

#include "vtqg/pauli.hpp"

#include <bit>
#include <cmath>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

// P|c> = phase(c) |c ^ flip>.
struct PauliAction {
  std::size_t flip = 0;
  std::size_t z_mask = 0;  // Z or Y positions contribute (-1)^bit
  std::size_t n_y = 0;
};

PauliAction action_of(const std::string& paulis) {
  PauliAction a;
  for (std::size_t q = 0; q < paulis.size(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    switch (paulis[q]) {
      case 'I':
        break;
      case 'X':
        a.flip |= bit;
        break;
      case 'Y':
        a.flip |= bit;
        a.z_mask |= bit;
        ++a.n_y;
        break;
      case 'Z':
        a.z_mask |= bit;
        break;
      default:
        throw InvalidArgument(std::string("bad Pauli character '") + paulis[q] + "'");
    }
  }
  return a;
}

cplx phase(const PauliAction& a, std::size_t c) {
  static const cplx kIPow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  const bool neg = std::popcount(c & a.z_mask) & 1;
  const cplx p = kIPow[a.n_y % 4];
  return neg ? -p : p;
}

}  // namespace

PauliObservable::PauliObservable(std::size_t n_qubits) : n_qubits_(n_qubits) {}

PauliObservable PauliObservable::single(std::size_t n_qubits, std::size_t qubit, char pauli) {
  if (qubit >= n_qubits) throw InvalidArgument("observable qubit out of range");
  std::string s(n_qubits, 'I');
  s[qubit] = pauli;
  PauliObservable obs(n_qubits);
  obs.add(std::move(s));
  return obs;
}

PauliObservable& PauliObservable::add(std::string paulis, double weight) {
  if (paulis.size() != n_qubits_) {
    throw InvalidArgument("Pauli string length " + std::to_string(paulis.size()) +
                          " does not match " + std::to_string(n_qubits_) + " qubits");
  }
  if (!std::isfinite(weight)) throw InvalidArgument("Pauli weight must be finite");
  action_of(paulis);
  terms_.push_back({std::move(paulis), weight});
  return *this;
}

double expectation(const StateVector& psi, const PauliObservable& obs) {
  if (psi.n_qubits() != obs.n_qubits()) {
    throw InvalidArgument("observable and state dimensions differ");
  }
  const auto amps = psi.amplitudes();
  double total = 0.0;
  for (const auto& t : obs.terms()) {
    const auto a = action_of(t.paulis);
    cplx acc = 0.0;
    // <psi|P|psi> = sum_c conj(psi[c ^ flip]) phase(c) psi[c]
    for (std::size_t c = 0; c < amps.size(); ++c) {
      acc += std::conj(amps[c ^ a.flip]) * phase(a, c) * amps[c];
    }
    total += t.weight * acc.real();
  }
  return total;
}

double expectation(const DensityMatrix& rho, const PauliObservable& obs) {
  if (rho.n_qubits() != obs.n_qubits()) {
    throw InvalidArgument("observable and state dimensions differ");
  }
  double total = 0.0;
  for (const auto& t : obs.terms()) {
    const auto a = action_of(t.paulis);
    cplx acc = 0.0;
    // Tr(P rho) = sum_c phase(c) rho[c][c ^ flip]
    for (std::size_t c = 0; c < rho.dim(); ++c) acc += phase(a, c) * rho(c, c ^ a.flip);
    total += t.weight * acc.real();
  }
  return total;
}

double single_qubit_expectation(const DensityMatrix& rho, std::size_t qubit, char pauli) {
  if (qubit >= rho.n_qubits()) throw InvalidArgument("qubit out of range");
  const std::size_t bit = std::size_t{1} << qubit;
  double acc = 0.0;
  for (std::size_t c = 0; c < rho.dim(); ++c) {
    const double sign = (c & bit) ? -1.0 : 1.0;
    switch (pauli) {
      case 'X':
        acc += rho(c, c ^ bit).real();
        break;
      case 'Y':
        // phase i * (-1)^bit
        acc += sign * (cplx(0, 1) * rho(c, c ^ bit)).real();
        break;
      case 'Z':
        acc += sign * rho(c, c).real();
        break;
      default:
        throw InvalidArgument("single_qubit_expectation takes X, Y or Z");
    }
  }
  return acc;
}

}  // namespace vtqg
