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

#include "vtqg/gate.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

/// Local superoperators appearing in the virtual RZZ decomposition.
enum class FragmentOpKind {
  Identity,
  /// Conjugation by Pauli Z.
  Z,
  /// rho -> (I + a Z) rho (I + a Z). Multiplies the weight of the kept
  /// Z-eigenspace by 4.
  Project,
  /// rho -> (I + i a Z) rho (I - i a Z) = 2 Rz(-a pi/2) rho Rz(-a pi/2)^dag.
  Rotate,
};

struct FragmentOp {
  FragmentOpKind kind = FragmentOpKind::Identity;
  /// +1 or -1; ignored by Identity and Z.
  int alpha = 1;

  static FragmentOp identity() { return {FragmentOpKind::Identity, 1}; }
  static FragmentOp z() { return {FragmentOpKind::Z, 1}; }
  static FragmentOp project(int alpha);
  static FragmentOp rotate(int alpha);

  bool operator==(const FragmentOp&) const = default;
};

/// Applies `op` on `qubit` in place. Linear in rho; Project and Rotate do
/// not preserve the trace.
void apply_fragment_operator(DensityMatrix& rho, Qubit qubit, const FragmentOp& op);

/// "I", "Z", "P+", "P-", "R+", "R-".
std::string to_string(const FragmentOp& op);

}  // namespace vtqg
