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

#include <string>
#include <vector>

#include "vtqg/state.hpp"

namespace vtqg {

/// Weighted sum of Pauli strings. Character i of a string acts on qubit i.
class PauliObservable {
 public:
  struct Term {
    std::string paulis;
    double weight;
  };

  explicit PauliObservable(std::size_t n_qubits);
  /// One Pauli ('X', 'Y' or 'Z') on `qubit`, identity elsewhere.
  static PauliObservable single(std::size_t n_qubits, std::size_t qubit, char pauli);

  PauliObservable& add(std::string paulis, double weight = 1.0);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::size_t n_qubits_;
  std::vector<Term> terms_;
};

double expectation(const StateVector& psi, const PauliObservable& obs);
/// Raw sum of weight * Tr(P rho); an unnormalized rho is not rescaled.
double expectation(const DensityMatrix& rho, const PauliObservable& obs);

/// Tr(P rho) for P = `pauli` on `qubit`; the fast path behind the
/// magnetization components.
double single_qubit_expectation(const DensityMatrix& rho, std::size_t qubit, char pauli);

}  // namespace vtqg
