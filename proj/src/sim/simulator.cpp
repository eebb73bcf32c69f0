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

#include "vtqg/simulator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

void check_register(const Circuit& circuit) {
  if (circuit.n_clbits() > 64) {
    throw ResourceLimit("classical register wider than 64 bits");
  }
}

void apply_noise(DensityMatrix& rho, const Gate& gate, const NoiseModel* noise) {
  if (!noise) return;
  const double p = noise_for_gate(*noise, gate);
  if (p > 0.0) depolarize(rho, gate.qubits(), p);
}

void apply_gate(DensityMatrix& rho, const Gate& gate, const NoiseModel* noise) {
  if (gate.kind() == GateKind::Reset) {
    rho.reset(gate.qubit(0));
  } else {
    rho.apply(gate);
  }
  apply_noise(rho, gate, noise);
}

bool bit_set(std::uint64_t reg, Clbit b) { return (reg >> b) & 1u; }

}  // namespace

StateVector run_statevector(const Circuit& circuit) {
  if (circuit.n_qubits() > kStatevectorMaxQubits) {
    throw ResourceLimit("statevector simulation capped at " +
                        std::to_string(kStatevectorMaxQubits) + " qubits");
  }
  if (circuit.has_nonunitary()) {
    throw UnsupportedOperation(
        "circuit contains measurement, reset or classical control; "
        "not supported in statevector mode");
  }
  StateVector psi(circuit.n_qubits());
  for (const Gate& g : circuit) psi.apply(g);
  return psi;
}

std::vector<DensityBranch> run_density_branches(const Circuit& circuit,
                                                const NoiseModel* noise,
                                                const Postselection& postselect,
                                                const DensityOptions& options) {
  if (circuit.n_qubits() > options.max_qubits) {
    throw ResourceLimit("density-matrix simulation of " +
                        std::to_string(circuit.n_qubits()) +
                        " qubits exceeds the cap of " +
                        std::to_string(options.max_qubits));
  }
  check_register(circuit);
  if (noise) noise->validate();

  std::set<Clbit> tracked;
  for (const Gate& g : circuit) {
    if (g.condition()) tracked.insert(*g.condition());
  }
  for (Clbit b : circuit.sign_bits()) tracked.insert(b);
  for (auto [b, v] : postselect) {
    if (!circuit.bit_written(b)) {
      throw InvalidCircuit("postselected bit " + std::to_string(b) +
                           " is never measured");
    }
    if (v != 0 && v != 1) throw InvalidArgument("postselected value must be 0 or 1");
    tracked.insert(b);
  }
  if (options.track_all_clbits) {
    for (Clbit b = 0; b < circuit.n_clbits(); ++b) tracked.insert(b);
  }
  const double flip = noise ? noise->readout_flip : 0.0;

  std::vector<DensityBranch> branches;
  branches.push_back({0, DensityMatrix(circuit.n_qubits())});

  for (const Gate& g : circuit) {
    if (auto c = g.condition()) {
      for (auto& br : branches) {
        if (bit_set(br.clbits, *c)) apply_gate(br.state, g, noise);
      }
      continue;
    }
    if (g.kind() != GateKind::MeasureZ) {
      for (auto& br : branches) apply_gate(br.state, g, noise);
      continue;
    }

    const Qubit q = g.qubit(0);
    const Clbit c = *g.target_bit();
    if (!tracked.contains(c)) {
      for (auto& br : branches) {
        br.state.dephase(q);
        apply_noise(br.state, g, noise);
      }
      continue;
    }

    const auto want = postselect.find(c);
    std::map<std::uint64_t, DensityMatrix> next;
    for (auto& br : branches) {
      DensityMatrix outcome[2] = {br.state, br.state};
      outcome[0].project(q, 0);
      outcome[1].project(q, 1);
      for (int record = 0; record < 2; ++record) {
        if (want != postselect.end() && want->second != record) continue;
        DensityMatrix rec = (1.0 - flip) * outcome[record];
        if (flip > 0.0) rec += flip * outcome[1 - record];
        apply_noise(rec, g, noise);
        const std::uint64_t reg =
            (br.clbits & ~(std::uint64_t{1} << c)) | (std::uint64_t(record) << c);
        auto [it, inserted] = next.try_emplace(reg, rec);
        if (!inserted) it->second += rec;
      }
    }
    if (next.size() > options.max_branches) {
      throw ResourceLimit("classical branching exceeds " +
                          std::to_string(options.max_branches) + " branches");
    }
    branches.clear();
    for (auto& [reg, rho] : next) branches.push_back({reg, std::move(rho)});
  }
  return branches;
}

DensityMatrix run_density(const Circuit& circuit, const NoiseModel* noise,
                          const Postselection& postselect, const DensityOptions& options) {
  auto branches = run_density_branches(circuit, noise, postselect, options);
  DensityMatrix total = std::move(branches.front().state);
  for (std::size_t i = 1; i < branches.size(); ++i) total += branches[i].state;
  return total;
}

int register_sign(const Circuit& circuit, std::uint64_t clbits) {
  int sign = 1;
  for (Clbit b : circuit.sign_bits()) {
    if (bit_set(clbits, b)) sign = -sign;
  }
  return sign;
}

std::vector<cplx> circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n > 12) throw ResourceLimit("dense unitary capped at 12 qubits");
  if (circuit.has_nonunitary()) {
    throw UnsupportedOperation("circuit_unitary needs a measurement-free circuit");
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> u(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<cplx> e(dim, 0.0);
    e[col] = 1.0;
    StateVector psi(n, std::move(e));
    for (const Gate& g : circuit) psi.apply(g);
    for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = psi[row];
  }
  return u;
}

}  // namespace vtqg
