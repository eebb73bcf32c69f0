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
#include <string>
#include <vector>

#include <json.hpp>

#include "vtqg/circuit.hpp"
#include "vtqg/simulator.hpp"

namespace vtqg {

/// A virtual RZZ removed from a circuit. Its local operations are inserted
/// before gate index `position` of the base circuit.
struct CutSite {
  std::size_t position = 0;
  Qubit qubit_a = 0;
  Qubit qubit_b = 0;
  /// Angle of the RZZ gate that was cut, in the circuit's convention.
  double gate_angle = 0.0;
};

enum class FragmentMode {
  /// Ten terms per cut; projections realized by postselected measurement.
  Enumerated,
  /// Six signed instruments per cut.
  Grouped,
};

/// 10^m or 6^m.
std::size_t fragment_count(std::size_t n_cuts, FragmentMode mode);

/// One executable circuit of the expanded decomposition.
///
/// Its contribution to any observable O is
///     coefficient * scale * sum over branches of sign * Tr(O rho_branch)
/// where the branches come from running `circuit` with `postselect`.
/// Which term (or instrument) a fragment picked at one cut.
struct CutChoice {
  std::size_t term = 0;
  /// "II", "ZZ", "PROJ_ROT", "ROT_PROJ", or "GROUPED".
  std::string family;
  int alpha_a = 0;
  int alpha_b = 0;
  /// Operator pair, e.g. "P+R-" or "M|Rz(+pi/2)".
  std::string label;
};

struct FragmentCircuit {
  std::size_t index = 0;
  std::vector<CutChoice> choices;
  /// Product of the per-cut term coefficients (or instrument weights).
  double coefficient = 1.0;
  /// Norm restored in post-processing: 4 per projection, 2 per rotation,
  /// times the classical probability of any absorbed projection.
  double scale = 1.0;
  Circuit circuit;
  Postselection postselect;
  /// Number of projections absorbed classically.
  std::size_t simplified = 0;
};

struct FragmentOptions {
  FragmentMode mode = FragmentMode::Enumerated;
  /// Absorb a projection classically when the projected qubit is RX(2 beta)
  /// from |0> and meets only Z-diagonal gates before the cut. Enumerated
  /// mode only. Projections failing the check keep the measurement.
  bool simplify_projected = false;
};

/// Expands every cut of `base` (cuts sorted by position, cut gates already
/// removed from `base`). Fragment k enumerates term indices in mixed radix
/// with the first cut most significant.
std::vector<FragmentCircuit> build_fragments(const Circuit& base, std::span<const CutSite> cuts,
                                             const FragmentOptions& options = {});

/// Manifest consumed by batch runners: one object per fragment with index,
/// per-cut choices, coefficient, scale, postselection, sign bits and the circuit text.
nlohmann::json manifest_to_json(std::span<const FragmentCircuit> fragments,
                                std::span<const CutSite> cuts);

}  // namespace vtqg
