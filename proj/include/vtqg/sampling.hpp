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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "vtqg/circuit.hpp"
#include "vtqg/noise.hpp"
#include "vtqg/simulator.hpp"

namespace vtqg {

/// Terminal measurement basis for one qubit.
enum class Basis : char { X = 'X', Y = 'Y', Z = 'Z' };

struct ShotOutcome {
  /// Mid-circuit classical register, bit b = clbit b.
  std::uint64_t clbits = 0;
  /// Terminal measurement, bit q = qubit q.
  std::uint64_t bits = 0;
  /// Product of (-1)^bit over the circuit's sign bits.
  int sign = 1;
};

/// Exact joint law of mid-circuit and terminal outcomes of a circuit,
/// reusable across seeds.
class OutcomeDistribution {
 public:
  /// See sample_shots for the meaning of the arguments.
  OutcomeDistribution(const Circuit& circuit, std::span<const Basis> basis = {},
                      const NoiseModel* noise = nullptr, const DensityOptions& options = {});

  std::vector<ShotOutcome> sample(std::size_t n_shots, std::uint64_t seed) const;
  std::size_t support() const { return outcomes_.size(); }

 private:
  std::size_t n_qubits_ = 0;
  double readout_flip_ = 0.0;
  double total_ = 0.0;
  std::vector<ShotOutcome> outcomes_;
  std::vector<double> cdf_;
};

/// Draws `n_shots` shots of `circuit` followed by a terminal measurement of
/// every qubit in `basis` (empty means all Z).
///
/// X is read out through H, Y through Rz(-pi/2) then H; these basis changes
/// are treated as part of the ideal measurement and carry no gate noise.
/// The joint law of mid-circuit and terminal outcomes is computed exactly
/// with the branch-resolved density simulator. Each shot is an independent
/// draw seeded from (seed, shot index) alone.
std::vector<ShotOutcome> sample_shots(const Circuit& circuit, std::size_t n_shots,
                                      std::uint64_t seed,
                                      std::span<const Basis> basis = {},
                                      const NoiseModel* noise = nullptr,
                                      const DensityOptions& options = {});

/// CSV with header `shot_index,bits,sign`. `bits` lists the classical
/// register c0..c(k-1) followed by the terminal outcome q0..q(n-1).
void write_shots_csv(std::ostream& os, std::span<const ShotOutcome> shots,
                     const Circuit& circuit);

}  // namespace vtqg
