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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vtqg/fragment_op.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

/// Term family of the virtual RZZ decomposition.
enum class TermFamily {
  II,
  ZZ,
  /// Projection on qubit a, rotation on qubit b.
  ProjRot,
  /// Rotation on qubit a, projection on qubit b.
  RotProj,
};

std::string_view to_string(TermFamily f);

/// One signed term: coefficient * (op_a (x) op_b).
struct QpdTerm {
  double coefficient = 0.0;
  FragmentOp op_a;
  FragmentOp op_b;
  TermFamily family = TermFamily::II;
  /// Sign labels of the cross terms; 0 for II and ZZ.
  int alpha_a = 0;
  int alpha_b = 0;
};

/// The decomposed channel is S(exp(+i theta/2 Z(x)Z)). A circuit gate
/// RZZ(t) = exp(-i t/2 Z(x)Z) therefore corresponds to theta = -t; this is
/// the only place that sign flips.
inline double decomposition_angle(double rzz_gate_angle) { return -rzz_gate_angle; }

/// Ten terms in a fixed order: II, ZZ, then ProjRot and RotProj, each over
/// (alpha_a, alpha_b) in (+,+), (+,-), (-,+), (-,-).
///
///   II: cos^2(theta/2)   ZZ: sin^2(theta/2)
///   cross: alpha_a alpha_b cos(theta/2) sin(theta/2) / 8
std::vector<QpdTerm> decompose_vrzz(double theta);

/// Sum of coefficient * (op_a on qubit 0, op_b on qubit 1) applied to a
/// two-qubit rho.
DensityMatrix reconstruct_channel(std::span<const QpdTerm> terms, const DensityMatrix& rho);

/// Sampling overhead 1 + 2|sin theta| of the grouped decomposition.
double gamma(double theta);

/// Local action of a grouped instrument on one cut qubit.
struct LocalInstrument {
  enum class Action {
    Identity,
    /// Pauli Z.
    Z,
    /// Z measurement whose outcome (+1 for 0, -1 for 1) multiplies the
    /// shot's quasi-probability sign.
    SignedMeasure,
    /// Rz(angle).
    Rz,
  };
  Action action = Action::Identity;
  double angle = 0.0;

  bool operator==(const LocalInstrument&) const = default;
};

std::string to_string(const LocalInstrument& inst);

/// Weighted CPTP instrument pair executed as one circuit.
struct GroupedInstrument {
  double weight = 0.0;
  LocalInstrument side_a;
  LocalInstrument side_b;
};

/// Collapses each alpha-indexed quadruple into signed-measurement
/// instruments, in the order II, ZZ, M(x)Rz(+pi/2), M(x)Rz(-pi/2),
/// Rz(+pi/2)(x)M, Rz(-pi/2)(x)M. Throws InvalidArgument unless `terms` has
/// the shape decompose_vrzz produces.
std::vector<GroupedInstrument> group_for_sampling(std::span<const QpdTerm> terms);

/// Sum of |weight|; equals gamma() for a well-formed grouping.
double gamma_from_grouping(std::span<const GroupedInstrument> groups);

/// Sum of weight * instrument applied to a two-qubit rho, with the signed
/// measurement acting as rho -> P0 rho P0 - P1 rho P1.
DensityMatrix reconstruct_channel(std::span<const GroupedInstrument> groups,
                                  const DensityMatrix& rho);

/// Caller's statement about the projected qubit. The simplification is only
/// sound when that qubit is RX(2 beta)|0> in product with the rest, up to
/// gates diagonal in Z.
enum class ProjectedState { Unverified, ProductStateAsserted };

/// A projection-bearing term with its projection absorbed classically.
struct SimplifiedTerm {
  double coefficient = 0.0;
  /// Tr(rho (I + alpha Z)/2) for rho = RX(2 beta)|0><0|RX^dag:
  /// cos^2(beta) for alpha = +1, sin^2(beta) for alpha = -1.
  double classical_factor = 0.0;
  /// Computational state the projected qubit is left in.
  int fixed_bit = 0;
  /// RZZ(t) touching the projected qubit acts as RZ(rz_sign * t) on its
  /// partner.
  int rz_sign = 1;
  bool projected_is_a = true;
  /// The operator that remains on the other cut qubit.
  FragmentOp partner_op;
  /// Norm carried by the fragment operators: 4 for the projection times 2
  /// for the rotation.
  double scale = 8.0;
};

/// Throws InvalidArgument for II/ZZ terms and when `state` is Unverified.
SimplifiedTerm simplify_projected(const QpdTerm& term, double beta, ProjectedState state);

/// Sum of coefficient * value. Throws InvalidArgument on empty input.
double reconstruct_expectation(std::span<const std::pair<double, double>> values);

}  // namespace vtqg
