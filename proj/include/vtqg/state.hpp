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
#include <span>
#include <vector>

#include "vtqg/gate_matrix.hpp"

namespace vtqg {

/// Pure state over little-endian qubits: basis index bit q is qubit q.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

  void apply(const Gate& gate);

 private:
  std::size_t n_qubits_;
  std::vector<cplx> amps_;
};

/// Density operator stored row-major. The trace is whatever the applied
/// operations make it: fragment operators scale it and nothing here
/// renormalizes.
class DensityMatrix {
 public:
  /// |0...0><0...0|.
  explicit DensityMatrix(std::size_t n_qubits);
  DensityMatrix(std::size_t n_qubits, std::vector<cplx> row_major);
  static DensityMatrix from_state(const StateVector& psi);
  static DensityMatrix zero(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  cplx operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  cplx trace() const;
  /// Frobenius norm of the difference.
  double distance(const DensityMatrix& other) const;

  /// rho -> A rho A^dagger for any single-qubit A (unitary or not).
  void conjugate(std::size_t qubit, const Mat2& a);
  void conjugate(std::size_t q0, std::size_t q1, const Mat4& a);
  /// Unitary gate channel. Throws UnsupportedOperation for MEASURE_Z/RESET.
  void apply(const Gate& gate);
  /// Sandwich with the projector onto Z = (-1)^outcome on `qubit`.
  void project(std::size_t qubit, int outcome);
  /// Full dephasing: sum of both projections.
  void dephase(std::size_t qubit);
  /// Trace out `qubit` and replace it with |0><0|.
  void reset(std::size_t qubit);

  DensityMatrix& operator+=(const DensityMatrix& other);
  DensityMatrix& operator*=(double factor);

 private:
  std::size_t n_qubits_;
  std::size_t dim_;
  std::vector<cplx> data_;
};

DensityMatrix operator+(DensityMatrix a, const DensityMatrix& b);
DensityMatrix operator*(double factor, DensityMatrix a);

}  // namespace vtqg
