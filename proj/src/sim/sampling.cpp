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

#include "vtqg/sampling.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>

#include "vtqg/errors.hpp"
#include "vtqg/rng.hpp"

namespace vtqg {

namespace {

void rotate_to_basis(DensityMatrix& rho, std::span<const Basis> basis) {
  for (std::size_t q = 0; q < basis.size(); ++q) {
    switch (basis[q]) {
      case Basis::Z:
        break;
      case Basis::Y:
        rho.apply(Gate::rz(q, -std::numbers::pi / 2));
        [[fallthrough]];
      case Basis::X:
        rho.apply(Gate::h(q));
        break;
    }
  }
}

}  // namespace

OutcomeDistribution::OutcomeDistribution(const Circuit& circuit, std::span<const Basis> basis,
                                         const NoiseModel* noise,
                                         const DensityOptions& options)
    : n_qubits_(circuit.n_qubits()), readout_flip_(noise ? noise->readout_flip : 0.0) {
  if (!basis.empty() && basis.size() != n_qubits_) {
    throw InvalidArgument("basis list must name one basis per qubit");
  }
  if (n_qubits_ > 64) throw ResourceLimit("sampling supports at most 64 qubits");

  DensityOptions opts = options;
  opts.track_all_clbits = true;
  auto branches = run_density_branches(circuit, noise, {}, opts);

  for (auto& br : branches) {
    rotate_to_basis(br.state, basis);
    const int sign = register_sign(circuit, br.clbits);
    for (std::size_t i = 0; i < br.state.dim(); ++i) {
      const double p = std::max(0.0, br.state(i, i).real());
      if (p == 0.0) continue;
      total_ += p;
      outcomes_.push_back({br.clbits, i, sign});
      cdf_.push_back(total_);
    }
  }
  if (outcomes_.empty() || !(total_ > 0.0)) {
    throw InvalidCircuit("circuit has no outcome with positive probability");
  }
}

std::vector<ShotOutcome> OutcomeDistribution::sample(std::size_t n_shots,
                                                     std::uint64_t seed) const {
  std::vector<ShotOutcome> shots(n_shots);
  for (std::size_t s = 0; s < n_shots; ++s) {
    SplitMix64 rng(derive_seed(seed, s));
    const double u = rng.uniform() * total_;
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t k = std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
    shots[s] = outcomes_[k];
    if (readout_flip_ > 0.0) {
      for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (rng.uniform() < readout_flip_) shots[s].bits ^= std::uint64_t{1} << q;
      }
    }
  }
  return shots;
}

std::vector<ShotOutcome> sample_shots(const Circuit& circuit, std::size_t n_shots,
                                      std::uint64_t seed, std::span<const Basis> basis,
                                      const NoiseModel* noise,
                                      const DensityOptions& options) {
  return OutcomeDistribution(circuit, basis, noise, options).sample(n_shots, seed);
}

void write_shots_csv(std::ostream& os, std::span<const ShotOutcome> shots,
                     const Circuit& circuit) {
  os << "shot_index,bits,sign\n";
  for (std::size_t s = 0; s < shots.size(); ++s) {
    os << s << ',';
    for (Clbit b = 0; b < circuit.n_clbits(); ++b) os << ((shots[s].clbits >> b) & 1u);
    for (Qubit q = 0; q < circuit.n_qubits(); ++q) os << ((shots[s].bits >> q) & 1u);
    os << ',' << shots[s].sign << '\n';
  }
}

}  // namespace vtqg
