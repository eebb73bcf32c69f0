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

#include "vtqg/fragment_op.hpp"

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {
int checked_alpha(int alpha) {
  if (alpha != 1 && alpha != -1) throw InvalidArgument("alpha must be +1 or -1");
  return alpha;
}
}  // namespace

FragmentOp FragmentOp::project(int alpha) {
  return {FragmentOpKind::Project, checked_alpha(alpha)};
}

FragmentOp FragmentOp::rotate(int alpha) {
  return {FragmentOpKind::Rotate, checked_alpha(alpha)};
}

void apply_fragment_operator(DensityMatrix& rho, Qubit qubit, const FragmentOp& op) {
  if (qubit >= rho.n_qubits()) {
    throw InvalidArgument("fragment operator qubit " + std::to_string(qubit) +
                          " out of range");
  }
  const double a = static_cast<double>(checked_alpha(op.alpha));
  switch (op.kind) {
    case FragmentOpKind::Identity:
      return;
    case FragmentOpKind::Z:
      rho.conjugate(qubit, Mat2{1.0, 0.0, 0.0, -1.0});
      return;
    case FragmentOpKind::Project:
      rho.conjugate(qubit, Mat2{1.0 + a, 0.0, 0.0, 1.0 - a});
      return;
    case FragmentOpKind::Rotate:
      rho.conjugate(qubit, Mat2{cplx(1.0, a), 0.0, 0.0, cplx(1.0, -a)});
      return;
  }
}

std::string to_string(const FragmentOp& op) {
  const char* sign = op.alpha > 0 ? "+" : "-";
  switch (op.kind) {
    case FragmentOpKind::Identity:
      return "I";
    case FragmentOpKind::Z:
      return "Z";
    case FragmentOpKind::Project:
      return std::string("P") + sign;
    case FragmentOpKind::Rotate:
      return std::string("R") + sign;
  }
  return "?";
}

}  // namespace vtqg
