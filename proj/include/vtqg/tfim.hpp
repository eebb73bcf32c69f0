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
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vtqg/circuit.hpp"
#include "vtqg/coupling.hpp"
#include "vtqg/decompose.hpp"
#include "vtqg/fragments.hpp"
#include "vtqg/state.hpp"

namespace vtqg {

/// Periodic transverse-field Ising chain H = h sum X_i - J sum Z_i Z_{i+1},
/// evolved from |0...0> with first-order Trotter steps of size dt.
struct TfimParams {
  std::size_t n_qubits = 8;
  double h = 0.786;
  double J = 0.787;
  double dt = 0.5;
  std::size_t n_steps = 1;

  /// Throws InvalidArgument unless n_qubits >= 2, dt > 0, n_steps >= 1 and
  /// all values are finite.
  void validate() const;

  /// RX angle of the field layer: exp(-i h dt X) = RX(2 h dt).
  double rx_angle() const { return 2.0 * h * dt; }
  /// RZZ gate angle of each bond: exp(+i J dt ZZ) = RZZ(-2 J dt).
  double rzz_angle() const { return -2.0 * J * dt; }

  bool operator==(const TfimParams&) const = default;
};

nlohmann::json to_json(const TfimParams& p);
TfimParams tfim_params_from_json(const nlohmann::json& j);

enum class Variant {
  /// Ring-connected logical circuit; statevector-legal.
  Ideal,
  /// Path-connected hardware, ring-closing bond routed with SWAPs.
  RoutedOriginal,
  /// Ring-closing bond cut into a virtual RZZ.
  Vtqg,
  /// As Vtqg, physical RZZ bonds compiled to pulse-efficient RZX.
  VtqgPet,
};

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

/// A Trotter circuit before RZZ lowering.
struct TrotterCircuit {
  Variant variant = Variant::Ideal;
  TfimParams params;
  /// Gates over physical qubits with RZZ unlowered. Cut bonds are absent.
  Circuit circuit;
  /// Where each logical qubit is read out.
  Layout layout;
  /// One per Trotter step for the VTQG variants.
  std::vector<CutSite> cuts;
  /// How executable circuits lower RZZ for this variant.
  RzzLowering lowering = RzzLowering::Keep;
};

/// Builds one variant. Each step applies RX(2 h dt) to every qubit, then
/// RZZ(-2 J dt) on bonds (i, i+1) in ascending order and the ring-closing
/// bond (0, n-1) last.
///
/// RoutedOriginal alternates: odd steps route the closing bond with
/// route_ring_closure, even steps apply it first (the endpoints are then
/// adjacent) and undo the SWAP chain before the remaining bonds. Throws
/// ResourceLimit when a VTQG variant would need more than `max_cuts` cuts.
TrotterCircuit build_trotter_circuit(const TfimParams& params, Variant variant,
                                     std::size_t max_cuts = 4);

/// The single circuit of a variant without cuts, RZZ lowered.
Circuit executable_circuit(const TrotterCircuit& tc);

/// Fragments of a VTQG variant, each RZZ lowered per the variant.
std::vector<FragmentCircuit> expand_fragments(const TrotterCircuit& tc,
                                              const FragmentOptions& options);

/// Per-logical-qubit <X>, <Y>, <Z>.
struct BlochComponents {
  std::vector<double> x, y, z;

  BlochComponents() = default;
  explicit BlochComponents(std::size_t n) : x(n, 0.0), y(n, 0.0), z(n, 0.0) {}
  std::size_t size() const { return x.size(); }
  /// Qubit averages of the three components.
  std::array<double, 3> averages() const;
};

/// Reads Tr(sigma rho) for every logical qubit through `layout`.
BlochComponents bloch_components(const DensityMatrix& rho, const Layout& layout);
BlochComponents bloch_components(const StateVector& psi);

/// Norm of the qubit-averaged Bloch vector. Throws InvalidArgument on a
/// length mismatch.
double magnetization(std::span<const double> sx, std::span<const double> sy,
                     std::span<const double> sz);
double magnetization(const BlochComponents& c);

/// Noiseless statevector magnetization of the Ideal variant.
double exact_reference(const TfimParams& params);
BlochComponents exact_components(const TfimParams& params);

}  // namespace vtqg
