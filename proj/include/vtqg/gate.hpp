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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace vtqg {

using Qubit = std::size_t;
using Clbit = std::size_t;

/// The fixed gate set understood by every backend. Arbitrary unitaries are
/// not supported.
enum class GateKind : std::uint8_t {
  X,
  SX,
  H,
  RX,
  RZ,
  RZZ,
  RZX,
  CNOT,
  SWAP,
  MeasureZ,
  Reset,
};

inline constexpr std::array<GateKind, 11> kAllGateKinds = {
    GateKind::X,    GateKind::SX,   GateKind::H,        GateKind::RX,
    GateKind::RZ,   GateKind::RZZ,  GateKind::RZX,      GateKind::CNOT,
    GateKind::SWAP, GateKind::MeasureZ, GateKind::Reset,
};

std::string_view to_string(GateKind kind);
std::optional<GateKind> gate_kind_from_string(std::string_view name);

std::size_t arity(GateKind kind);
bool has_angle(GateKind kind);
bool is_unitary(GateKind kind);
/// True for gates whose matrix is diagonal in the computational basis.
bool is_diagonal(GateKind kind);

/// A single circuit element.
///
/// Angles are in radians and follow the exp(-i*angle/2*P) convention for
/// every rotation: RX, RZ, RZZ = exp(-i*angle/2*Z(x)Z), RZX = exp(-i*angle/2
/// * Z(x)X) with Z on the first listed qubit. A gate may be classically
/// controlled, in which case it fires only when the referenced bit reads 1.
class Gate {
 public:
  static Gate x(Qubit q);
  static Gate sx(Qubit q);
  static Gate h(Qubit q);
  static Gate rx(Qubit q, double angle);
  static Gate rz(Qubit q, double angle);
  static Gate rzz(Qubit a, Qubit b, double angle);
  /// `pulse_efficient` tags the RZX as the native interaction produced by
  /// pulse-efficient compilation; the noise model scales its error by angle.
  static Gate rzx(Qubit control, Qubit target, double angle,
                  bool pulse_efficient = false);
  static Gate cnot(Qubit control, Qubit target);
  static Gate swap(Qubit a, Qubit b);
  static Gate measure_z(Qubit q, Clbit target);
  static Gate reset(Qubit q);

  /// Generic factory used by the text parser. Validates arity and angles.
  static Gate make(GateKind kind, std::span<const Qubit> qubits,
                   double angle = 0.0);

  /// Copy of this gate that only fires when `bit` reads 1.
  [[nodiscard]] Gate controlled_by(Clbit bit) const;

  GateKind kind() const { return kind_; }
  std::size_t num_qubits() const { return arity(kind_); }
  std::span<const Qubit> qubits() const { return {qubits_.data(), num_qubits()}; }
  Qubit qubit(std::size_t i) const { return qubits_.at(i); }
  double angle() const { return angle_; }
  /// Destination bit of a MeasureZ.
  std::optional<Clbit> target_bit() const { return target_bit_; }
  std::optional<Clbit> condition() const { return condition_; }
  bool pulse_efficient() const { return pulse_efficient_; }
  bool acts_on(Qubit q) const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::array<Qubit, 2> qubits, double angle);

  GateKind kind_;
  std::array<Qubit, 2> qubits_{};
  double angle_ = 0.0;
  std::optional<Clbit> target_bit_;
  std::optional<Clbit> condition_;
  bool pulse_efficient_ = false;
};

std::string to_string(const Gate& gate);

}  // namespace vtqg
