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

#include "vtqg/fragments.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <optional>

#include "vtqg/errors.hpp"
#include "vtqg/qpd.hpp"
#include "vtqg/text_format.hpp"

namespace vtqg {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Where an absorbed projection rewrites the base circuit: the RX that
// prepared the qubit, and the end of the Z-diagonal run that follows it.
struct ProjectionPlan {
  Qubit qubit = 0;
  std::size_t rx_index = 0;
  std::size_t run_end = 0;
  double beta = 0.0;
  int fixed_bit = 0;
  int rz_sign = 1;
};

bool plain_diagonal(const Gate& g) { return is_diagonal(g.kind()) && !g.condition(); }

std::optional<ProjectionPlan> plan_projection(const Circuit& base, Qubit q,
                                              std::size_t cut_position) {
  std::optional<std::size_t> rx;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].acts_on(q)) {
      rx = i;
      break;
    }
  }
  if (!rx || *rx >= cut_position) return std::nullopt;
  const Gate& prep = base[*rx];
  if (prep.kind() != GateKind::RX || prep.condition()) return std::nullopt;
  std::size_t i = *rx + 1;
  for (; i < base.size(); ++i) {
    if (!base[i].acts_on(q)) continue;
    if (!plain_diagonal(base[i])) break;
  }
  if (i < cut_position) return std::nullopt;
  ProjectionPlan plan;
  plan.qubit = q;
  plan.rx_index = *rx;
  plan.run_end = i;
  plan.beta = prep.angle() / 2.0;
  return plan;
}

bool plans_overlap(const Circuit& base, const ProjectionPlan& a, const ProjectionPlan& b) {
  if (a.qubit == b.qubit) return true;
  for (std::size_t i = a.rx_index; i < a.run_end; ++i) {
    if (base[i].acts_on(a.qubit) && base[i].acts_on(b.qubit) && i >= b.rx_index &&
        i < b.run_end) {
      return true;
    }
  }
  return false;
}

struct Builder {
  Circuit circuit;
  Postselection postselect;
  double scale = 1.0;

  void measure(Qubit q, std::optional<int> keep, bool sign) {
    const Clbit c = circuit.add_clbit();
    circuit.append(Gate::measure_z(q, c));
    if (keep) postselect[c] = *keep;
    if (sign) circuit.mark_sign_bit(c);
  }

  void realize(Qubit q, const FragmentOp& op) {
    switch (op.kind) {
      case FragmentOpKind::Identity:
        break;
      case FragmentOpKind::Z:
        circuit.append(Gate::rz(q, kPi));
        break;
      case FragmentOpKind::Project:
        measure(q, op.alpha > 0 ? 0 : 1, false);
        scale *= 4.0;
        break;
      case FragmentOpKind::Rotate:
        circuit.append(Gate::rz(q, -op.alpha * kPi / 2));
        scale *= 2.0;
        break;
    }
  }

  void realize(Qubit q, const LocalInstrument& inst) {
    switch (inst.action) {
      case LocalInstrument::Action::Identity:
        break;
      case LocalInstrument::Action::Z:
        circuit.append(Gate::rz(q, kPi));
        break;
      case LocalInstrument::Action::SignedMeasure:
        measure(q, std::nullopt, true);
        break;
      case LocalInstrument::Action::Rz:
        circuit.append(Gate::rz(q, inst.angle));
        break;
    }
  }
};

}  // namespace

std::size_t fragment_count(std::size_t n_cuts, FragmentMode mode) {
  return ipow(mode == FragmentMode::Enumerated ? 10 : 6, n_cuts);
}

std::vector<FragmentCircuit> build_fragments(const Circuit& base, std::span<const CutSite> cuts,
                                             const FragmentOptions& options) {
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const CutSite& cut = cuts[k];
    if (cut.position > base.size()) throw InvalidArgument("cut position beyond circuit end");
    if (cut.qubit_a >= base.n_qubits() || cut.qubit_b >= base.n_qubits() ||
        cut.qubit_a == cut.qubit_b) {
      throw InvalidArgument("cut qubits invalid");
    }
    if (k > 0 && cuts[k - 1].position > cut.position) {
      throw InvalidArgument("cuts must be sorted by position");
    }
  }
  if (cuts.size() > 12) throw ResourceLimit("too many cuts to expand");

  const bool grouped = options.mode == FragmentMode::Grouped;
  const std::size_t radix = grouped ? 6 : 10;
  std::vector<std::vector<QpdTerm>> terms;
  std::vector<std::vector<GroupedInstrument>> groups;
  for (const CutSite& cut : cuts) {
    terms.push_back(decompose_vrzz(decomposition_angle(cut.gate_angle)));
    if (grouped) groups.push_back(group_for_sampling(terms.back()));
  }

  const std::size_t total = fragment_count(cuts.size(), options.mode);
  std::vector<FragmentCircuit> out;
  out.reserve(total);
  std::vector<std::size_t> choice(cuts.size());

  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rem = index;
    for (std::size_t k = cuts.size(); k-- > 0;) {
      choice[k] = rem % radix;
      rem /= radix;
    }

    FragmentCircuit frag{index, {}, 1.0, 1.0, Circuit(base.n_qubits(), base.n_clbits()), {}, 0};
    std::vector<ProjectionPlan> plans;
    std::vector<bool> absorbed(cuts.size(), false);

    if (!grouped && options.simplify_projected) {
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        const QpdTerm& t = terms[k][choice[k]];
        if (t.family != TermFamily::ProjRot && t.family != TermFamily::RotProj) continue;
        const Qubit q = t.family == TermFamily::ProjRot ? cuts[k].qubit_a : cuts[k].qubit_b;
        auto plan = plan_projection(base, q, cuts[k].position);
        if (!plan) continue;
        if (std::any_of(plans.begin(), plans.end(),
                        [&](const auto& p) { return plans_overlap(base, p, *plan); })) {
          continue;
        }
        const SimplifiedTerm st =
            simplify_projected(t, plan->beta, ProjectedState::ProductStateAsserted);
        plan->fixed_bit = st.fixed_bit;
        plan->rz_sign = st.rz_sign;
        frag.scale *= 4.0 * st.classical_factor;
        absorbed[k] = true;
        plans.push_back(*plan);
      }
    }
    frag.simplified = plans.size();

    Builder b{std::move(frag.circuit), {}, frag.scale};
    auto emit_cuts_at = [&](std::size_t pos) {
      for (std::size_t k = 0; k < cuts.size(); ++k) {
        if (cuts[k].position != pos) continue;
        if (grouped) {
          const GroupedInstrument& g = groups[k][choice[k]];
          b.realize(cuts[k].qubit_a, g.side_a);
          b.realize(cuts[k].qubit_b, g.side_b);
          frag.coefficient *= g.weight;
          frag.choices.push_back({choice[k], "GROUPED", 0, 0,
                                  to_string(g.side_a) + "|" + to_string(g.side_b)});
        } else {
          const QpdTerm& t = terms[k][choice[k]];
          const bool proj_a = t.op_a.kind == FragmentOpKind::Project;
          const bool proj_b = t.op_b.kind == FragmentOpKind::Project;
          if (!(absorbed[k] && proj_a)) b.realize(cuts[k].qubit_a, t.op_a);
          if (!(absorbed[k] && proj_b)) b.realize(cuts[k].qubit_b, t.op_b);
          frag.coefficient *= t.coefficient;
          frag.choices.push_back({choice[k], std::string(to_string(t.family)), t.alpha_a,
                                  t.alpha_b, to_string(t.op_a) + to_string(t.op_b)});
        }
      }
    };

    for (std::size_t i = 0; i < base.size(); ++i) {
      emit_cuts_at(i);
      const Gate& g = base[i];
      const ProjectionPlan* plan = nullptr;
      for (const auto& p : plans) {
        if (g.acts_on(p.qubit) && i >= p.rx_index && i < p.run_end) plan = &p;
      }
      if (!plan) {
        b.circuit.append(g);
      } else if (i == plan->rx_index) {
        b.circuit.append(Gate::reset(plan->qubit));
        if (plan->fixed_bit) b.circuit.append(Gate::x(plan->qubit));
      } else if (g.kind() == GateKind::RZZ) {
        const Qubit partner = g.qubit(0) == plan->qubit ? g.qubit(1) : g.qubit(0);
        b.circuit.append(Gate::rz(partner, plan->rz_sign * g.angle()));
      } else {
        b.circuit.append(g);
      }
    }
    emit_cuts_at(base.size());
    for (Clbit s : base.sign_bits()) b.circuit.mark_sign_bit(s);

    frag.circuit = std::move(b.circuit);
    frag.postselect = std::move(b.postselect);
    frag.scale = b.scale;
    out.push_back(std::move(frag));
  }
  return out;
}

nlohmann::json manifest_to_json(std::span<const FragmentCircuit> fragments,
                                std::span<const CutSite> cuts) {
  nlohmann::json jcuts = nlohmann::json::array();
  for (const CutSite& c : cuts) {
    jcuts.push_back({{"position", c.position},
                     {"qubits", {c.qubit_a, c.qubit_b}},
                     {"gate_angle", c.gate_angle},
                     {"decomposition_angle", decomposition_angle(c.gate_angle)}});
  }
  nlohmann::json jfrags = nlohmann::json::array();
  for (const FragmentCircuit& f : fragments) {
    nlohmann::json post = nlohmann::json::object();
    for (auto [bit, value] : f.postselect) post[std::to_string(bit)] = value;
    nlohmann::json choices = nlohmann::json::array();
    for (const CutChoice& c : f.choices) {
      choices.push_back({{"term", c.term},
                         {"family", c.family},
                         {"alpha_a", c.alpha_a},
                         {"alpha_b", c.alpha_b},
                         {"label", c.label}});
    }
    jfrags.push_back({{"index", f.index},
                      {"choices", choices},
                      {"coefficient", f.coefficient},
                      {"scale", f.scale},
                      {"postselect", post},
                      {"sign_bits", f.circuit.sign_bits()},
                      {"simplified", f.simplified},
                      {"circuit", to_text(f.circuit)}});
  }
  return {{"cuts", jcuts}, {"fragments", jfrags}};
}

}  // namespace vtqg
