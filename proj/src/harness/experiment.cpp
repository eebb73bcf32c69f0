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
#include <optional>
#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"
#include "vtqg/rng.hpp"
#include "vtqg/sampling.hpp"
#include "vtqg/simulator.hpp"

namespace vtqg {

namespace {

constexpr std::array<Basis, 3> kBases = {Basis::X, Basis::Y, Basis::Z};

// Fragments of a variant; a variant without cuts is a single fragment of
// weight 1.
std::vector<FragmentCircuit> fragments_for(const TrotterCircuit& tc, const ExperimentConfig& cfg) {
  if (tc.cuts.empty()) {
    FragmentCircuit f{0, {}, 1.0, 1.0, executable_circuit(tc), {}, 0};
    std::vector<FragmentCircuit> out;
    out.push_back(std::move(f));
    return out;
  }
  return expand_fragments(tc, {cfg.fragment_mode(), cfg.simplify_projected});
}

bool postselected(const FragmentCircuit& f, std::uint64_t clbits) {
  for (auto [bit, value] : f.postselect) {
    if (static_cast<int>((clbits >> bit) & 1u) != value) return false;
  }
  return true;
}

void evaluate_exact(const TrotterCircuit& tc, const std::vector<FragmentCircuit>& fragments,
                    const ExperimentConfig& cfg, VariantEvaluation& out) {
  const std::size_t n = tc.params.n_qubits;
  BlochComponents acc(n);
  for (const FragmentCircuit& f : fragments) {
    const auto branches = run_density_branches(f.circuit, &cfg.noise, f.postselect);
    for (const auto& br : branches) {
      const double w = f.coefficient * f.scale * register_sign(f.circuit, br.clbits);
      const BlochComponents c = bloch_components(br.state, tc.layout);
      for (std::size_t i = 0; i < n; ++i) {
        acc.x[i] += w * c.x[i];
        acc.y[i] += w * c.y[i];
        acc.z[i] += w * c.z[i];
      }
    }
  }
  // Terminal readout flips shrink every single-qubit expectation.
  const double shrink = 1.0 - 2.0 * cfg.noise.readout_flip;
  for (std::size_t i = 0; i < n; ++i) {
    acc.x[i] *= shrink;
    acc.y[i] *= shrink;
    acc.z[i] *= shrink;
  }
  out.components = std::move(acc);
  out.circuits_executed = fragments.size();
}

std::vector<std::size_t> allocate_shots(const std::vector<FragmentCircuit>& fragments,
                                        const ExperimentConfig& cfg) {
  std::vector<std::size_t> shots(fragments.size(), cfg.shots);
  if (cfg.shot_allocation == ShotAllocation::PerFragment) return shots;
  double norm = 0.0;
  for (const auto& f : fragments) norm += std::abs(f.coefficient * f.scale);
  const double budget = static_cast<double>(cfg.shots * fragments.size());
  for (std::size_t k = 0; k < fragments.size(); ++k) {
    const double share = std::abs(fragments[k].coefficient * fragments[k].scale);
    if (share == 0.0 || norm == 0.0) {
      shots[k] = 0;
      continue;
    }
    const auto share_shots = static_cast<std::size_t>(std::floor(budget * share / norm));
    shots[k] = std::max<std::size_t>(1, share_shots);
  }
  return shots;
}

struct Prepared {
  TrotterCircuit tc;
  std::vector<FragmentCircuit> fragments;
  std::vector<std::size_t> shots;
  // Indexed fragment * 3 + basis; empty in exact mode.
  std::vector<OutcomeDistribution> distributions;
  VariantEvaluation exact;
};

Prepared prepare(const ExperimentConfig& cfg, Variant variant) {
  cfg.validate();
  Prepared p{build_trotter_circuit(cfg.params, variant, cfg.max_cuts), {}, {}, {}, {}};
  p.fragments = fragments_for(p.tc, cfg);
  p.exact.fragments = p.fragments.size();
  p.exact.two_qubit_gates =
      count_gates(lower_rzz(p.tc.circuit, p.tc.lowering)).two_qubit_tally();
  if (cfg.mode == Mode::Exact) {
    evaluate_exact(p.tc, p.fragments, cfg, p.exact);
    p.exact.averages = p.exact.components.averages();
    p.exact.magnetization = magnetization(p.exact.components);
    return p;
  }
  p.shots = allocate_shots(p.fragments, cfg);
  const std::size_t n = p.tc.params.n_qubits;
  p.distributions.reserve(p.fragments.size() * kBases.size());
  for (const FragmentCircuit& f : p.fragments) {
    for (Basis b : kBases) {
      const std::vector<Basis> basis(n, b);
      p.distributions.emplace_back(f.circuit, basis, &cfg.noise);
    }
  }
  return p;
}

VariantEvaluation evaluate_sampling(const Prepared& p, std::uint64_t seed) {
  const std::size_t n = p.tc.params.n_qubits;
  VariantEvaluation out = p.exact;
  BlochComponents acc(n);
  std::array<double, 3> variance{0.0, 0.0, 0.0};
  std::size_t executed = 0;

  for (std::size_t k = 0; k < p.fragments.size(); ++k) {
    const FragmentCircuit& f = p.fragments[k];
    if (p.shots[k] == 0) continue;
    const double w = f.coefficient * f.scale;
    const double m = static_cast<double>(p.shots[k]);
    for (std::size_t b = 0; b < kBases.size(); ++b) {
      const std::uint64_t sub = derive_seed(derive_seed(seed, f.index), b);
      const auto outcomes = p.distributions[k * kBases.size() + b].sample(p.shots[k], sub);
      ++executed;

      std::vector<double> per_qubit(n, 0.0);
      double sum = 0.0, sum_sq = 0.0;
      for (const ShotOutcome& s : outcomes) {
        if (!postselected(f, s.clbits)) continue;
        double avg = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double o = ((s.bits >> p.tc.layout.physical(i)) & 1u) ? -1.0 : 1.0;
          per_qubit[i] += s.sign * o;
          avg += o;
        }
        avg = s.sign * avg / static_cast<double>(n);
        sum += avg;
        sum_sq += avg * avg;
      }
      std::vector<double>& target = b == 0 ? acc.x : (b == 1 ? acc.y : acc.z);
      for (std::size_t i = 0; i < n; ++i) target[i] += w * per_qubit[i] / m;
      const double mean = sum / m;
      const double var = m > 1 ? (sum_sq - m * mean * mean) / (m - 1) : 0.0;
      variance[b] += w * w * std::max(var, 0.0) / m;
    }
  }
  out.components = std::move(acc);
  out.circuits_executed = executed;
  out.averages = out.components.averages();
  out.magnetization = magnetization(out.components);

  const auto& avg = out.averages;
  const double mag = out.magnetization;
  double var_mag = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    const double grad = mag > 0.0 ? avg[j] / mag : 1.0;
    var_mag += grad * grad * variance[j];
  }
  out.magnetization_stderr = std::sqrt(var_mag);
  return out;
}

VariantEvaluation evaluate(const Prepared& p, const ExperimentConfig& cfg, std::uint64_t seed) {
  return cfg.mode == Mode::Exact ? p.exact : evaluate_sampling(p, seed);
}

}  // namespace

VariantEvaluation evaluate_variant(const ExperimentConfig& cfg, Variant variant,
                                   std::uint64_t seed) {
  return evaluate(prepare(cfg, variant), cfg, seed);
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const double ideal = exact_reference(cfg.params);
  std::vector<ResultRecord> records;
  using Clock = std::chrono::steady_clock;
  const auto ms = [](Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  for (Variant v : cfg.variants) {
    const auto t0 = Clock::now();
    std::optional<Prepared> prepared;
    try {
      prepared.emplace(prepare(cfg, v));
    } catch (const ResourceLimit& e) {
      throw ResourceLimit("variant " + std::string(to_string(v)) + ", " +
                          std::to_string(cfg.params.n_qubits) + " qubits: " + e.what());
    }
    // Simulation is shared by all repetitions; each record carries an equal
    // share of it plus its own sampling time.
    const double shared = ms(Clock::now() - t0) / static_cast<double>(cfg.repetitions);
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      const auto t1 = Clock::now();
      const VariantEvaluation eval = evaluate(*prepared, cfg, cfg.seed + rep);
      const double own = ms(Clock::now() - t1);
      ResultRecord r;
      r.variant = v;
      r.n_qubits = cfg.params.n_qubits;
      r.repetition = rep;
      r.mag = eval.magnetization;
      r.sx = eval.averages[0];
      r.sy = eval.averages[1];
      r.sz = eval.averages[2];
      r.ideal = ideal;
      r.fragments = eval.fragments;
      r.two_qubit_gates = eval.two_qubit_gates;
      r.wall_ms = cfg.record_timing ? shared + own : 0.0;
      records.push_back(r);
    }
  }
  return records;
}

}  // namespace vtqg
