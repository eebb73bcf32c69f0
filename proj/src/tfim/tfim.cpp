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

#include "vtqg/tfim.hpp"

#include <cmath>
#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/pauli.hpp"
#include "vtqg/routing.hpp"
#include "vtqg/simulator.hpp"

namespace vtqg {

void TfimParams::validate() const {
  if (n_qubits < 2) throw InvalidArgument("TFIM needs at least 2 qubits");
  if (!std::isfinite(h) || !std::isfinite(J) || !std::isfinite(dt)) {
    throw InvalidArgument("TFIM parameters must be finite");
  }
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  if (n_steps < 1) throw InvalidArgument("n_steps must be at least 1");
}

nlohmann::json to_json(const TfimParams& p) {
  return {{"n_qubits", p.n_qubits}, {"h", p.h},           {"J", p.J},
          {"dt", p.dt},             {"n_steps", p.n_steps}, {"boundary", "periodic"}};
}

TfimParams tfim_params_from_json(const nlohmann::json& j) {
  TfimParams p;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_qubits") p.n_qubits = value.get<std::size_t>();
      else if (key == "h") p.h = value.get<double>();
      else if (key == "J") p.J = value.get<double>();
      else if (key == "dt") p.dt = value.get<double>();
      else if (key == "n_steps") p.n_steps = value.get<std::size_t>();
      else if (key == "boundary") {
        if (value.get<std::string>() != "periodic") {
          throw InvalidArgument("only periodic boundary conditions are supported");
        }
      } else {
        throw InvalidArgument("unknown params field '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed params JSON: ") + e.what());
  }
  p.validate();
  return p;
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Ideal:
      return "ideal";
    case Variant::RoutedOriginal:
      return "routed_original";
    case Variant::Vtqg:
      return "vtqg";
    case Variant::VtqgPet:
      return "vtqg_pet";
  }
  return "?";
}

Variant variant_from_string(std::string_view s) {
  for (Variant v : {Variant::Ideal, Variant::RoutedOriginal, Variant::Vtqg, Variant::VtqgPet}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidArgument("unknown variant '" + std::string(s) + "'");
}

TrotterCircuit build_trotter_circuit(const TfimParams& params, Variant variant,
                                     std::size_t max_cuts) {
  params.validate();
  const std::size_t n = params.n_qubits;
  const bool cut = variant == Variant::Vtqg || variant == Variant::VtqgPet;
  if (cut && params.n_steps > max_cuts) {
    throw ResourceLimit(std::to_string(params.n_steps) + " virtual gates requested, cap is " +
                        std::to_string(max_cuts) + " (fragment count grows as 10^m)");
  }
  const double rx = params.rx_angle();
  const double zz = params.rzz_angle();

  TrotterCircuit tc{variant, params, Circuit(n), Layout::identity(n), {}, RzzLowering::Keep};
  switch (variant) {
    case Variant::Ideal:
      tc.lowering = RzzLowering::Keep;
      break;
    case Variant::RoutedOriginal:
    case Variant::Vtqg:
      tc.lowering = RzzLowering::Cnot;
      break;
    case Variant::VtqgPet:
      tc.lowering = RzzLowering::PulseEfficient;
      break;
  }

  Circuit& c = tc.circuit;
  const auto chain_bonds = [&] {
    for (Qubit i = 0; i + 1 < n; ++i) c.append(Gate::rzz(i, i + 1, zz));
  };

  std::optional<RingClosureRouting> routing;
  if (variant == Variant::RoutedOriginal) {
    routing = route_ring_closure(n, CouplingMap::path(n), zz);
  }

  for (std::size_t step = 0; step < params.n_steps; ++step) {
    for (Qubit q = 0; q < n; ++q) c.append(Gate::rx(q, rx));

    if (variant != Variant::RoutedOriginal) {
      chain_bonds();
      if (cut) {
        tc.cuts.push_back({c.size(), 0, n - 1, zz});
      } else {
        c.append(Gate::rzz(0, n - 1, zz));
      }
      continue;
    }

    const auto& chain = routing->circuit;
    const std::size_t swaps = chain.size() - 1;
    if (step % 2 == 0) {
      chain_bonds();
      c.append(chain.gates());
      tc.layout = routing->final;
    } else {
      // Endpoints are adjacent from the previous step.
      c.append(chain[swaps]);
      for (std::size_t k = swaps; k-- > 0;) c.append(chain[k]);
      chain_bonds();
      tc.layout = routing->initial;
    }
  }
  return tc;
}

Circuit executable_circuit(const TrotterCircuit& tc) {
  if (!tc.cuts.empty()) {
    throw InvalidArgument("variant '" + std::string(to_string(tc.variant)) +
                          "' has cuts; expand its fragments instead");
  }
  return lower_rzz(tc.circuit, tc.lowering);
}

std::vector<FragmentCircuit> expand_fragments(const TrotterCircuit& tc,
                                              const FragmentOptions& options) {
  auto fragments = build_fragments(tc.circuit, tc.cuts, options);
  for (auto& f : fragments) f.circuit = lower_rzz(f.circuit, tc.lowering);
  return fragments;
}

std::array<double, 3> BlochComponents::averages() const {
  std::array<double, 3> avg{0.0, 0.0, 0.0};
  if (x.empty()) return avg;
  for (std::size_t i = 0; i < x.size(); ++i) {
    avg[0] += x[i];
    avg[1] += y[i];
    avg[2] += z[i];
  }
  for (double& a : avg) a /= static_cast<double>(x.size());
  return avg;
}

BlochComponents bloch_components(const DensityMatrix& rho, const Layout& layout) {
  if (layout.size() != rho.n_qubits()) throw InvalidArgument("layout size mismatch");
  BlochComponents c(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const std::size_t p = layout.physical(i);
    c.x[i] = single_qubit_expectation(rho, p, 'X');
    c.y[i] = single_qubit_expectation(rho, p, 'Y');
    c.z[i] = single_qubit_expectation(rho, p, 'Z');
  }
  return c;
}

BlochComponents bloch_components(const StateVector& psi) {
  const std::size_t n = psi.n_qubits();
  BlochComponents c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.x[i] = expectation(psi, PauliObservable::single(n, i, 'X'));
    c.y[i] = expectation(psi, PauliObservable::single(n, i, 'Y'));
    c.z[i] = expectation(psi, PauliObservable::single(n, i, 'Z'));
  }
  return c;
}

double magnetization(std::span<const double> sx, std::span<const double> sy,
                     std::span<const double> sz) {
  if (sx.size() != sy.size() || sx.size() != sz.size()) {
    throw InvalidArgument("magnetization components must have equal length");
  }
  if (sx.empty()) throw InvalidArgument("magnetization needs at least one qubit");
  const auto mean = [](std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double mx = mean(sx), my = mean(sy), mz = mean(sz);
  return std::sqrt(mx * mx + my * my + mz * mz);
}

double magnetization(const BlochComponents& c) { return magnetization(c.x, c.y, c.z); }

BlochComponents exact_components(const TfimParams& params) {
  const auto tc = build_trotter_circuit(params, Variant::Ideal);
  return bloch_components(run_statevector(tc.circuit));
}

double exact_reference(const TfimParams& params) {
  return magnetization(exact_components(params));
}

}  // namespace vtqg
