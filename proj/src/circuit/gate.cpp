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

#include "vtqg/gate.hpp"

#include <cmath>
#include <sstream>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  bool angle;
  bool unitary;
  bool diagonal;
};

constexpr std::array<KindInfo, 11> kKinds = {{
    {GateKind::X, "X", 1, false, true, false},
    {GateKind::SX, "SX", 1, false, true, false},
    {GateKind::H, "H", 1, false, true, false},
    {GateKind::RX, "RX", 1, true, true, false},
    {GateKind::RZ, "RZ", 1, true, true, true},
    {GateKind::RZZ, "RZZ", 2, true, true, true},
    {GateKind::RZX, "RZX", 2, true, true, false},
    {GateKind::CNOT, "CNOT", 2, false, true, false},
    {GateKind::SWAP, "SWAP", 2, false, true, false},
    {GateKind::MeasureZ, "MEASURE_Z", 1, false, false, false},
    {GateKind::Reset, "RESET", 1, false, false, false},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

void require_finite(double angle, GateKind kind) {
  if (!std::isfinite(angle)) {
    throw InvalidArgument("non-finite angle for " +
                          std::string(to_string(kind)) + " gate");
  }
}

}  // namespace

std::string_view to_string(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_string(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::size_t arity(GateKind kind) { return info(kind).arity; }
bool has_angle(GateKind kind) { return info(kind).angle; }
bool is_unitary(GateKind kind) { return info(kind).unitary; }
bool is_diagonal(GateKind kind) { return info(kind).diagonal; }

Gate::Gate(GateKind kind, std::array<Qubit, 2> qubits, double angle)
    : kind_(kind), qubits_(qubits), angle_(angle) {
  require_finite(angle, kind);
  if (arity(kind) == 2 && qubits[0] == qubits[1]) {
    throw InvalidArgument(std::string(to_string(kind)) +
                          " gate needs two distinct qubits");
  }
}

Gate Gate::x(Qubit q) { return Gate(GateKind::X, {q, 0}, 0.0); }
Gate Gate::sx(Qubit q) { return Gate(GateKind::SX, {q, 0}, 0.0); }
Gate Gate::h(Qubit q) { return Gate(GateKind::H, {q, 0}, 0.0); }
Gate Gate::rx(Qubit q, double angle) { return Gate(GateKind::RX, {q, 0}, angle); }
Gate Gate::rz(Qubit q, double angle) { return Gate(GateKind::RZ, {q, 0}, angle); }
Gate Gate::rzz(Qubit a, Qubit b, double angle) {
  return Gate(GateKind::RZZ, {a, b}, angle);
}
Gate Gate::rzx(Qubit control, Qubit target, double angle, bool pulse_efficient) {
  Gate g(GateKind::RZX, {control, target}, angle);
  g.pulse_efficient_ = pulse_efficient;
  return g;
}
Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate(GateKind::CNOT, {control, target}, 0.0);
}
Gate Gate::swap(Qubit a, Qubit b) { return Gate(GateKind::SWAP, {a, b}, 0.0); }
Gate Gate::measure_z(Qubit q, Clbit target) {
  Gate g(GateKind::MeasureZ, {q, 0}, 0.0);
  g.target_bit_ = target;
  return g;
}
Gate Gate::reset(Qubit q) { return Gate(GateKind::Reset, {q, 0}, 0.0); }

Gate Gate::make(GateKind kind, std::span<const Qubit> qubits, double angle) {
  if (qubits.size() != arity(kind)) {
    throw InvalidArgument(std::string(to_string(kind)) + " expects " +
                          std::to_string(arity(kind)) + " qubit(s), got " +
                          std::to_string(qubits.size()));
  }
  if (kind == GateKind::MeasureZ) {
    throw InvalidArgument("use Gate::measure_z to build a measurement");
  }
  if (!has_angle(kind)) angle = 0.0;
  std::array<Qubit, 2> q{qubits[0], qubits.size() > 1 ? qubits[1] : 0};
  return Gate(kind, q, angle);
}

Gate Gate::controlled_by(Clbit bit) const {
  if (kind_ == GateKind::MeasureZ) {
    throw InvalidArgument("a measurement cannot be classically controlled");
  }
  Gate g = *this;
  g.condition_ = bit;
  return g;
}

bool Gate::acts_on(Qubit q) const {
  for (Qubit x : qubits()) {
    if (x == q) return true;
  }
  return false;
}

std::string to_string(const Gate& gate) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(gate.kind()) << ' ';
  const auto qs = gate.qubits();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) os << ',';
    os << qs[i];
  }
  if (has_angle(gate.kind())) os << ' ' << gate.angle();
  if (gate.pulse_efficient()) os << " pet";
  if (gate.target_bit()) os << " -> " << *gate.target_bit();
  if (gate.condition()) os << " if " << *gate.condition();
  return os.str();
}

}  // namespace vtqg
