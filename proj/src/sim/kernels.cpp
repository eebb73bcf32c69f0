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
#include <numbers>

#include "vtqg/errors.hpp"
#include "vtqg/gate_matrix.hpp"

namespace vtqg {

namespace {
constexpr cplx kI{0.0, 1.0};
}

std::variant<Mat2, Mat4> gate_matrix(const Gate& gate) {
  const double half = gate.angle() / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  switch (gate.kind()) {
    case GateKind::X:
      return Mat2{0.0, 1.0, 1.0, 0.0};
    case GateKind::SX:
      return Mat2{cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return Mat2{r, r, r, -r};
    }
    case GateKind::RX:
      return Mat2{c, -kI * s, -kI * s, c};
    case GateKind::RZ:
      return Mat2{std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half)};
    case GateKind::RZZ: {
      const cplx even = std::exp(-kI * half);
      const cplx odd = std::exp(kI * half);
      Mat4 m{};
      m[0] = even;
      m[5] = odd;
      m[10] = odd;
      m[15] = even;
      return m;
    }
    case GateKind::RZX: {
      // cos I - i sin Z(x)X
      Mat4 m{};
      m[0] = c;
      m[1] = -kI * s;
      m[4] = -kI * s;
      m[5] = c;
      m[10] = c;
      m[11] = kI * s;
      m[14] = kI * s;
      m[15] = c;
      return m;
    }
    case GateKind::CNOT: {
      Mat4 m{};
      m[0] = 1.0;
      m[5] = 1.0;
      m[11] = 1.0;
      m[14] = 1.0;
      return m;
    }
    case GateKind::SWAP: {
      Mat4 m{};
      m[0] = 1.0;
      m[6] = 1.0;
      m[9] = 1.0;
      m[15] = 1.0;
      return m;
    }
    case GateKind::MeasureZ:
    case GateKind::Reset:
      break;
  }
  throw UnsupportedOperation(std::string(to_string(gate.kind())) +
                             " has no unitary matrix");
}

Mat2 conj(const Mat2& m) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = std::conj(m[i]);
  return r;
}

Mat4 conj(const Mat4& m) {
  Mat4 r;
  for (std::size_t i = 0; i < 16; ++i) r[i] = std::conj(m[i]);
  return r;
}

namespace kernels {

void apply_1q(std::span<cplx> amps, std::size_t bit, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a = amps[i];
      const cplx b = amps[i + stride];
      amps[i] = m[0] * a + m[1] * b;
      amps[i + stride] = m[2] * a + m[3] * b;
    }
  }
}

void apply_2q(std::span<cplx> amps, std::size_t bit0, std::size_t bit1, const Mat4& m) {
  const std::size_t s0 = std::size_t{1} << bit0;
  const std::size_t s1 = std::size_t{1} << bit1;
  const std::size_t n = amps.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i & (s0 | s1)) continue;
    const std::size_t idx[4] = {i, i | s1, i | s0, i | s0 | s1};
    cplx in[4];
    for (std::size_t k = 0; k < 4; ++k) in[k] = amps[idx[k]];
    for (std::size_t r = 0; r < 4; ++r) {
      amps[idx[r]] = m[4 * r] * in[0] + m[4 * r + 1] * in[1] +
                     m[4 * r + 2] * in[2] + m[4 * r + 3] * in[3];
    }
  }
}

}  // namespace kernels

}  // namespace vtqg
