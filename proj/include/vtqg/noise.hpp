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

#include <json.hpp>

#include "vtqg/gate.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

enum class PetScaling {
  Off,
  /// Error of a pulse-efficient RZX(theta) is p2 * |theta| / pi, kept
  /// within [p1, p2].
  LinearInAngle,
};

/// Depolarizing noise attached to each gate by arity.
///
/// The defaults are the averaged device figures for single-qubit gates and
/// CNOTs, used directly as depolarizing strengths.
struct NoiseModel {
  double p1 = 0.0003;
  double p2 = 0.0087;
  PetScaling pet_scaling = PetScaling::LinearInAngle;
  double reset_error = 0.0;
  double readout_flip = 0.0;

  static NoiseModel ideal() { return {0.0, 0.0, PetScaling::Off, 0.0, 0.0}; }

  /// Throws InvalidArgument if any probability lies outside [0, 1].
  void validate() const;

  bool operator==(const NoiseModel&) const = default;
};

/// rho -> (1-p) rho + p Tr_Q(rho) (x) I/d on the 1 or 2 qubits Q.
void depolarize(DensityMatrix& rho, std::span<const Qubit> qubits, double p);

/// Depolarizing strength applied right after `gate`.
///
/// Single-qubit gates get p1. A CNOT gets p2; SWAP and an unlowered RZZ are
/// charged as three and two CNOTs, which for depolarizing noise on a fixed
/// pair compose to 1-(1-p2)^k. A pulse-efficient RZX follows `pet_scaling`.
/// MEASURE_Z and RESET get `reset_error`.
double noise_for_gate(const NoiseModel& model, const Gate& gate);

std::string_view to_string(PetScaling s);
PetScaling pet_scaling_from_string(std::string_view s);

/// JSON fields: p1, p2, pet_scaling ("off" | "linear_in_angle"),
/// reset_error, readout_flip. Missing fields keep their defaults.
nlohmann::json to_json(const NoiseModel& model);
NoiseModel noise_from_json(const nlohmann::json& j);

}  // namespace vtqg
