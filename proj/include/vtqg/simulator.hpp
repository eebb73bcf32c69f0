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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vtqg/circuit.hpp"
#include "vtqg/noise.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

/// Classical bit -> required value (0 or 1). The surviving density matrix
/// is left unnormalized.
using Postselection = std::map<Clbit, int>;

struct DensityOptions {
  std::size_t max_qubits = 10;
  std::size_t max_branches = 256;
  /// Keep every classical bit resolved into its own branch, not only those
  /// that are read back (conditions, postselection, sign bits).
  bool track_all_clbits = false;
};

/// Unnormalized state conditioned on one classical-register value.
struct DensityBranch {
  std::uint64_t clbits = 0;
  DensityMatrix state;
};

inline constexpr std::size_t kStatevectorMaxQubits = 24;

/// Exact pure-state evolution from |0...0>. Throws UnsupportedOperation on
/// measurement, reset or classical control.
StateVector run_statevector(const Circuit& circuit);

/// Exact channel evolution from |0...0>.
///
/// After every gate the depolarizing channel chosen by `noise` (if any) acts
/// on the gate's qubits. An unselected MEASURE_Z dephases; RESET replaces
/// the qubit with |0>. Throws ResourceLimit above `options.max_qubits`.
DensityMatrix run_density(const Circuit& circuit, const NoiseModel* noise = nullptr,
                          const Postselection& postselect = {},
                          const DensityOptions& options = {});

/// Same evolution, with the classical register resolved: one unnormalized
/// branch per distinct value of the tracked bits. Branches are ordered by
/// register value; untracked bits read 0.
std::vector<DensityBranch> run_density_branches(const Circuit& circuit,
                                                const NoiseModel* noise = nullptr,
                                                const Postselection& postselect = {},
                                                const DensityOptions& options = {});

/// Product of (-1)^bit over the circuit's sign bits.
int register_sign(const Circuit& circuit, std::uint64_t clbits);

/// Dense unitary of a measurement-free circuit, row-major.
std::vector<cplx> circuit_unitary(const Circuit& circuit);

}  // namespace vtqg
