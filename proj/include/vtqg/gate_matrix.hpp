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

#include <array>
#include <complex>
#include <span>
#include <variant>

#include "vtqg/gate.hpp"

namespace vtqg {

using cplx = std::complex<double>;

/// Row-major 2x2.
using Mat2 = std::array<cplx, 4>;
/// Row-major 4x4 over |q0 q1>, q0 being the first listed qubit (most
/// significant in the row index).
using Mat4 = std::array<cplx, 16>;

/// Unitary of a gate kind. Throws UnsupportedOperation for MEASURE_Z/RESET.
std::variant<Mat2, Mat4> gate_matrix(const Gate& gate);

Mat2 conj(const Mat2& m);
Mat4 conj(const Mat4& m);

namespace kernels {

/// In-place action of a single-qubit operator on bit `bit` of a
/// little-endian amplitude array.
void apply_1q(std::span<cplx> amps, std::size_t bit, const Mat2& m);
/// In-place action of a two-qubit operator; `bit0` is the first operand.
void apply_2q(std::span<cplx> amps, std::size_t bit0, std::size_t bit1, const Mat4& m);

}  // namespace kernels

}  // namespace vtqg
