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

#include "vtqg/errors.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

// Row-major storage viewed as a 2n-qubit vector: column index occupies bits
// [0, n), row index bits [n, 2n). A rho A^dagger is A on the row bits and
// conj(A) on the column bits.

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), data_(dim_ * dim_, 0.0) {
  data_[0] = 1.0;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, std::vector<cplx> row_major)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw InvalidArgument("density matrix needs 4^n entries");
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix rho = zero(psi.n_qubits());
  const auto a = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r) {
    for (std::size_t c = 0; c < rho.dim_; ++c) rho(r, c) = a[r] * std::conj(a[c]);
  }
  return rho;
}

DensityMatrix DensityMatrix::zero(std::size_t n_qubits) {
  DensityMatrix rho(n_qubits);
  rho.data_[0] = 0.0;
  return rho;
}

cplx DensityMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

double DensityMatrix::distance(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw InvalidArgument("density matrix dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) s += std::norm(data_[i] - other.data_[i]);
  return std::sqrt(s);
}

void DensityMatrix::conjugate(std::size_t qubit, const Mat2& a) {
  if (qubit >= n_qubits_) throw InvalidArgument("qubit out of range");
  kernels::apply_1q(data_, qubit + n_qubits_, a);
  kernels::apply_1q(data_, qubit, vtqg::conj(a));
}

void DensityMatrix::conjugate(std::size_t q0, std::size_t q1, const Mat4& a) {
  if (q0 >= n_qubits_ || q1 >= n_qubits_) throw InvalidArgument("qubit out of range");
  kernels::apply_2q(data_, q0 + n_qubits_, q1 + n_qubits_, a);
  kernels::apply_2q(data_, q0, q1, vtqg::conj(a));
}

void DensityMatrix::apply(const Gate& gate) {
  const auto m = gate_matrix(gate);
  if (const auto* m2 = std::get_if<Mat2>(&m)) {
    conjugate(gate.qubit(0), *m2);
  } else {
    conjugate(gate.qubit(0), gate.qubit(1), std::get<Mat4>(m));
  }
}

void DensityMatrix::project(std::size_t qubit, int outcome) {
  if (qubit >= n_qubits_) throw InvalidArgument("qubit out of range");
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t want = outcome ? mask : 0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if ((r & mask) != want || (c & mask) != want) data_[r * dim_ + c] = 0.0;
    }
  }
}

void DensityMatrix::dephase(std::size_t qubit) {
  if (qubit >= n_qubits_) throw InvalidArgument("qubit out of range");
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if ((r & mask) != (c & mask)) data_[r * dim_ + c] = 0.0;
    }
  }
}

void DensityMatrix::reset(std::size_t qubit) {
  if (qubit >= n_qubits_) throw InvalidArgument("qubit out of range");
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & mask) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & mask) continue;
      data_[r * dim_ + c] += data_[(r | mask) * dim_ + (c | mask)];
    }
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if ((r | c) & mask) data_[r * dim_ + c] = 0.0;
    }
  }
}

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& other) {
  if (other.dim_ != dim_) throw InvalidArgument("density matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DensityMatrix& DensityMatrix::operator*=(double factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

DensityMatrix operator+(DensityMatrix a, const DensityMatrix& b) { return a += b; }
DensityMatrix operator*(double factor, DensityMatrix a) { return a *= factor; }

}  // namespace vtqg
