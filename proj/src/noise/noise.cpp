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

#include "vtqg/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " +
                          std::to_string(p));
  }
}

double repeated(double p, int times) { return 1.0 - std::pow(1.0 - p, times); }

}  // namespace

void NoiseModel::validate() const {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  check_probability(reset_error, "reset_error");
  check_probability(readout_flip, "readout_flip");
}

void depolarize(DensityMatrix& rho, std::span<const Qubit> qubits, double p) {
  check_probability(p, "depolarizing strength");
  if (qubits.empty() || qubits.size() > 2) {
    throw InvalidArgument("depolarize acts on one or two qubits");
  }
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw InvalidArgument("depolarize needs distinct qubits");
  }
  std::size_t mask = 0;
  for (Qubit q : qubits) {
    if (q >= rho.n_qubits()) throw InvalidArgument("qubit out of range");
    mask |= std::size_t{1} << q;
  }
  if (p == 0.0) return;

  // Sub-index offsets k enumerating the 2^|Q| settings of the masked bits.
  std::vector<std::size_t> offsets{0};
  for (Qubit q : qubits) {
    const std::size_t b = std::size_t{1} << q;
    const std::size_t sz = offsets.size();
    for (std::size_t i = 0; i < sz; ++i) offsets.push_back(offsets[i] | b);
  }
  const double d = static_cast<double>(offsets.size());
  const std::size_t dim = rho.dim();

  for (std::size_t r = 0; r < dim; ++r) {
    if (r & mask) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      if (c & mask) continue;
      cplx avg = 0.0;
      for (std::size_t k : offsets) avg += rho(r | k, c | k);
      avg /= d;
      for (std::size_t k : offsets) {
        for (std::size_t kk : offsets) {
          cplx& x = rho(r | k, c | kk);
          x = (1.0 - p) * x + (k == kk ? p * avg : cplx{0.0});
        }
      }
    }
  }
}

double noise_for_gate(const NoiseModel& model, const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::X:
    case GateKind::SX:
    case GateKind::H:
    case GateKind::RX:
    case GateKind::RZ:
      return model.p1;
    case GateKind::CNOT:
      return model.p2;
    case GateKind::SWAP:
      return repeated(model.p2, 3);
    case GateKind::RZZ:
      return repeated(model.p2, 2);
    case GateKind::RZX: {
      if (!gate.pulse_efficient() || model.pet_scaling == PetScaling::Off) return model.p2;
      const double lo = std::min(model.p1, model.p2);
      const double hi = std::max(model.p1, model.p2);
      return std::clamp(model.p2 * std::abs(gate.angle()) / std::numbers::pi, lo, hi);
    }
    case GateKind::MeasureZ:
    case GateKind::Reset:
      return model.reset_error;
  }
  return 0.0;
}

std::string_view to_string(PetScaling s) {
  return s == PetScaling::Off ? "off" : "linear_in_angle";
}

PetScaling pet_scaling_from_string(std::string_view s) {
  if (s == "off") return PetScaling::Off;
  if (s == "linear_in_angle") return PetScaling::LinearInAngle;
  throw InvalidArgument("unknown pet_scaling '" + std::string(s) + "'");
}

nlohmann::json to_json(const NoiseModel& model) {
  return {{"p1", model.p1},
          {"p2", model.p2},
          {"pet_scaling", to_string(model.pet_scaling)},
          {"reset_error", model.reset_error},
          {"readout_flip", model.readout_flip}};
}

NoiseModel noise_from_json(const nlohmann::json& j) {
  NoiseModel m;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "p1") m.p1 = value.get<double>();
      else if (key == "p2") m.p2 = value.get<double>();
      else if (key == "pet_scaling")
        m.pet_scaling = pet_scaling_from_string(value.get<std::string>());
      else if (key == "reset_error") m.reset_error = value.get<double>();
      else if (key == "readout_flip") m.readout_flip = value.get<double>();
      else throw InvalidArgument("unknown noise model field '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed noise model JSON: ") + e.what());
  }
  m.validate();
  return m;
}

}  // namespace vtqg
