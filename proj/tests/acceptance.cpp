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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "vtqg/circuit.hpp"
#include "vtqg/coupling.hpp"
#include "vtqg/fragments.hpp"
#include "vtqg/harness.hpp"
#include "vtqg/pauli.hpp"
#include "vtqg/qpd.hpp"
#include "vtqg/routing.hpp"
#include "vtqg/sampling.hpp"
#include "vtqg/simulator.hpp"
#include "vtqg/tfim.hpp"

namespace {

using namespace vtqg;
using oracle::Mat;

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

std::vector<double> theta_grid() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  std::vector<double> grid(20);
  for (double& t : grid) t = angle(rng);
  return grid;
}

void channel_completeness(Check& c) {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (double theta : theta_grid()) {
    const auto terms = decompose_vrzz(theta);
    const Mat u = oracle::expm_pauli("ZZ", -theta);
    for (int j = 0; j < 50; ++j) {
      const Mat rho = oracle::random_density(2, rng);
      const Mat got = oracle::to_eigen(reconstruct_channel(terms, oracle::from_eigen(rho)));
      worst = std::max(worst, (got - u * rho * u.adjoint()).norm());
    }
  }
  c.detail << "max Frobenius error " << worst;
  c.expect(worst < 1e-10, "; exceeds 1e-10");
}

void overhead_identity(Check& c) {
  double worst = 0.0;
  for (double theta : theta_grid()) {
    const double g = gamma_from_grouping(group_for_sampling(decompose_vrzz(theta)));
    worst = std::max(worst, std::abs(g - (1.0 + 2.0 * std::abs(std::sin(theta)))));
  }
  c.detail << "max deviation " << worst << ", gamma(0)=" << vtqg::gamma(0.0)
           << ", gamma(pi/2)=" << vtqg::gamma(kPi / 2);
  c.expect(worst < 1e-12, "; deviation exceeds 1e-12");
  c.expect(vtqg::gamma(0.0) == 1.0 && vtqg::gamma(kPi / 2) == 3.0, "; endpoint values inexact");
}

void swap_counts(Check& c) {
  const std::size_t expected[] = {2, 4, 6};
  const std::size_t sizes[] = {4, 6, 8};
  c.detail << "swaps";
  for (int i = 0; i < 3; ++i) {
    const auto r = route_ring_closure(sizes[i], CouplingMap::path(sizes[i]));
    c.detail << " N=" << sizes[i] << ":" << r.swap_count;
    c.expect(r.swap_count == expected[i], "; wrong count");
  }
  double worst = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = route_ring_closure(n, CouplingMap::path(n), 0.787);
    const Mat perm = oracle::layout_permutation(r.final.mapping());
    Circuit logical(n);
    logical.append(Gate::rzz(0, n - 1, 0.787));
    const Mat diff = perm.adjoint() * oracle::circuit_unitary(r.circuit) -
                     oracle::circuit_unitary(logical);
    worst = std::max(worst, diff.norm());
  }
  c.detail << ", dense equivalence error " << worst;
  c.expect(worst < 1e-10, "; routed unitary mismatch");
}

void fragment_counts(Check& c) {
  TfimParams p;
  const TrotterCircuit single = build_trotter_circuit(p, Variant::Vtqg);
  const auto one = expand_fragments(single, {FragmentMode::Enumerated, false});
  const auto grouped = expand_fragments(single, {FragmentMode::Grouped, false});
  p.n_steps = 2;
  const auto two =
      expand_fragments(build_trotter_circuit(p, Variant::Vtqg), {FragmentMode::Enumerated, false});
  c.detail << "m=1: " << one.size() << ", m=2: " << two.size()
           << ", grouped m=1: " << grouped.size();
  c.expect(one.size() == 10 && two.size() == 100 && grouped.size() == 6, "; wrong count");
}

void noiseless_end_to_end(Check& c) {
  double worst = 0.0;
  for (std::size_t n : {4u, 6u, 8u}) {
    ExperimentConfig cfg;
    cfg.mode = Mode::Exact;
    cfg.noise = NoiseModel::ideal();
    cfg.params.n_qubits = n;
    const double ref = oracle::magnetization(
        oracle::trotter_state(n, cfg.params.h, cfg.params.J, cfg.params.dt, 1), n);
    for (Variant v : {Variant::RoutedOriginal, Variant::Vtqg, Variant::VtqgPet}) {
      worst = std::max(worst, std::abs(evaluate_variant(cfg, v, 0).magnetization - ref));
    }
  }
  c.detail << "max deviation " << worst;
  c.expect(worst < 1e-9, "; exceeds 1e-9");
}

void error_ordering(Check& c) {
  double previous_gap = -1.0;
  for (std::size_t n : {4u, 6u, 8u}) {
    ExperimentConfig cfg;
    cfg.mode = Mode::Exact;
    cfg.params.n_qubits = n;
    const double ideal = exact_reference(cfg.params);
    auto err = [&](Variant v) {
      return std::abs(evaluate_variant(cfg, v, 0).magnetization - ideal);
    };
    const double routed = err(Variant::RoutedOriginal), vtqg = err(Variant::Vtqg);
    const double gap = routed - vtqg;
    c.detail << "N=" << n << " gap " << gap << "; ";
    c.expect(gap > previous_gap, "gap not increasing; ");
    previous_gap = gap;
    if (n == 8) {
      const double pet = err(Variant::VtqgPet);
      c.detail << "N=8 errors pet " << pet << " vtqg " << vtqg << " routed " << routed;
      c.expect(pet <= vtqg && vtqg < routed, "; ordering violated");
    }
  }
}

void sampling_unbiased(Check& c) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 100000;
  cfg.grouping = Grouping::Grouped;
  cfg.shot_allocation = ShotAllocation::PerFragment;
  const auto sampled = evaluate_variant(cfg, Variant::Vtqg, 20260101);
  cfg.mode = Mode::Exact;
  const double exact = evaluate_variant(cfg, Variant::Vtqg, 0).magnetization;
  const double z = std::abs(sampled.magnetization - exact) / sampled.magnetization_stderr;
  c.detail << "sampled " << sampled.magnetization << " exact " << exact << " (" << z << " SE)";
  c.expect(z < 4.0, "; outside 4 standard errors");
}

double fragment_value(const FragmentCircuit& f, const PauliObservable& obs) {
  double v = 0.0;
  for (const auto& br : run_density_branches(f.circuit, nullptr, f.postselect)) {
    v += register_sign(f.circuit, br.clbits) * expectation(br.state, obs);
  }
  return f.coefficient * f.scale * v;
}

void projected_simplification(Check& c) {
  const auto terms = decompose_vrzz(0.787);
  const double factor =
      simplify_projected(terms[2], 0.393, ProjectedState::ProductStateAsserted).classical_factor;
  c.detail << "cos^2 factor " << factor;
  c.expect(std::abs(factor - std::cos(0.393) * std::cos(0.393)) < 1e-15, "; wrong factor");
  c.expect(std::abs(factor - 0.853) < 5e-4, "; factor not near 0.853");

  TfimParams p;
  p.n_qubits = 4;
  const TrotterCircuit tc = build_trotter_circuit(p, Variant::Vtqg);
  const auto full = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Enumerated, false});
  const auto simple = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Enumerated, true});
  double worst = 0.0;
  std::size_t absorbed = 0;
  for (std::size_t k = 0; k < full.size(); ++k) {
    absorbed += simple[k].simplified;
    for (std::size_t q = 0; q < p.n_qubits; ++q) {
      for (char axis : {'X', 'Y', 'Z'}) {
        const auto obs = PauliObservable::single(p.n_qubits, tc.layout.physical(q), axis);
        const double diff = fragment_value(simple[k], obs) - fragment_value(full[k], obs);
        worst = std::max(worst, std::abs(diff));
      }
    }
  }
  c.detail << ", " << absorbed << " terms simplified, max deviation " << worst;
  c.expect(absorbed == 8 && worst < 1e-10, "; simplified contribution differs");
}

void determinism(Check& c) {
  ExperimentConfig cfg;
  cfg.record_timing = false;
  std::ostringstream first, second;
  write_csv(first, run_experiment(cfg));
  write_csv(second, run_experiment(cfg));
  c.detail << first.str().size() << " bytes per run";
  c.expect(!first.str().empty() && first.str() == second.str(), "; outputs differ");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "channel completeness", 10, channel_completeness},
      {2, "sampling overhead identity", 0, overhead_identity},
      {3, "ring-closure SWAP counts", 0, swap_counts},
      {4, "fragment counts", 0, fragment_counts},
      {5, "noiseless end-to-end", 30, noiseless_end_to_end},
      {6, "error-suppression ordering", 60, error_ordering},
      {7, "sampling unbiasedness", 120, sampling_unbiased},
      {8, "projected-term simplification", 0, projected_simplification},
      {9, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("; threw: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) {
      c.expect(false, "; exceeded time limit");
    }
    failures += !c.ok;
    std::printf("[%s] %d %s: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name,
                c.detail.str().c_str(), secs);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
