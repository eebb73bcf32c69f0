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

#include "vtqg/qpd.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

constexpr std::array<std::pair<int, int>, 4> kAlphaOrder = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

void apply_local(DensityMatrix& rho, Qubit q, const LocalInstrument& inst) {
  switch (inst.action) {
    case LocalInstrument::Action::Identity:
      return;
    case LocalInstrument::Action::Z:
      rho.conjugate(q, Mat2{1.0, 0.0, 0.0, -1.0});
      return;
    case LocalInstrument::Action::SignedMeasure: {
      DensityMatrix minus = rho;
      rho.project(q, 0);
      minus.project(q, 1);
      rho += -1.0 * minus;
      return;
    }
    case LocalInstrument::Action::Rz:
      rho.apply(Gate::rz(q, inst.angle));
      return;
  }
}

}  // namespace

std::string_view to_string(TermFamily f) {
  switch (f) {
    case TermFamily::II:
      return "II";
    case TermFamily::ZZ:
      return "ZZ";
    case TermFamily::ProjRot:
      return "PROJ_ROT";
    case TermFamily::RotProj:
      return "ROT_PROJ";
  }
  return "?";
}

std::vector<QpdTerm> decompose_vrzz(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("decomposition angle must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double cross = c * s / 8.0;

  std::vector<QpdTerm> terms;
  terms.reserve(10);
  terms.push_back({c * c, FragmentOp::identity(), FragmentOp::identity(), TermFamily::II, 0, 0});
  terms.push_back({s * s, FragmentOp::z(), FragmentOp::z(), TermFamily::ZZ, 0, 0});
  for (auto [a, b] : kAlphaOrder) {
    terms.push_back({a * b * cross, FragmentOp::project(a), FragmentOp::rotate(b),
                     TermFamily::ProjRot, a, b});
  }
  for (auto [a, b] : kAlphaOrder) {
    terms.push_back({a * b * cross, FragmentOp::rotate(a), FragmentOp::project(b),
                     TermFamily::RotProj, a, b});
  }
  return terms;
}

DensityMatrix reconstruct_channel(std::span<const QpdTerm> terms, const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw InvalidArgument("reconstruct_channel needs a two-qubit state");
  DensityMatrix out = DensityMatrix::zero(2);
  for (const QpdTerm& t : terms) {
    DensityMatrix r = rho;
    apply_fragment_operator(r, 0, t.op_a);
    apply_fragment_operator(r, 1, t.op_b);
    out += t.coefficient * r;
  }
  return out;
}

double gamma(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("decomposition angle must be finite");
  return 1.0 + 2.0 * std::abs(std::sin(theta));
}

std::string to_string(const LocalInstrument& inst) {
  switch (inst.action) {
    case LocalInstrument::Action::Identity:
      return "I";
    case LocalInstrument::Action::Z:
      return "Z";
    case LocalInstrument::Action::SignedMeasure:
      return "M";
    case LocalInstrument::Action::Rz: {
      if (std::abs(std::abs(inst.angle) - std::numbers::pi / 2) < 1e-15) {
        return inst.angle > 0 ? "Rz(+pi/2)" : "Rz(-pi/2)";
      }
      std::ostringstream os;
      os.precision(17);
      os << "Rz(" << inst.angle << ")";
      return os.str();
    }
  }
  return "?";
}

std::vector<GroupedInstrument> group_for_sampling(std::span<const QpdTerm> terms) {
  if (terms.size() != 10) {
    throw InvalidArgument("expected 10 decomposition terms, got " + std::to_string(terms.size()));
  }
  if (terms[0].family != TermFamily::II || terms[1].family != TermFamily::ZZ) {
    throw InvalidArgument("decomposition must start with the II and ZZ terms");
  }
  using A = LocalInstrument::Action;
  const LocalInstrument id{A::Identity, 0.0};
  const LocalInstrument z{A::Z, 0.0};
  const LocalInstrument meas{A::SignedMeasure, 0.0};
  const double half_pi = std::numbers::pi / 2;

  std::vector<GroupedInstrument> groups;
  groups.push_back({terms[0].coefficient, id, id});
  groups.push_back({terms[1].coefficient, z, z});

  // Within a family, sum_a c(a,b) * 4 P_a (x) 2 Rz(-b pi/2) collapses to
  // w_b * (sum_a a P_a) (x) Rz(-b pi/2) iff c(-1,b) = -c(+1,b); w_b = 8 c(+1,b).
  for (int fam = 0; fam < 2; ++fam) {
    const TermFamily want = fam == 0 ? TermFamily::ProjRot : TermFamily::RotProj;
    const std::span<const QpdTerm> quad = terms.subspan(2 + 4 * fam, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      const QpdTerm& t = quad[k];
      if (t.family != want || t.alpha_a != kAlphaOrder[k].first ||
          t.alpha_b != kAlphaOrder[k].second) {
        throw InvalidArgument("decomposition terms out of order at family " +
                              std::string(to_string(want)));
      }
    }
    // quad order: (+,+), (+,-), (-,+), (-,-); the rotation label is alpha_b
    // for ProjRot and alpha_a for RotProj.
    const auto weight_for_rotation = [&](int rot_alpha) {
      const QpdTerm& plus = fam == 0 ? quad[rot_alpha > 0 ? 0 : 1] : quad[rot_alpha > 0 ? 0 : 2];
      const QpdTerm& minus = fam == 0 ? quad[rot_alpha > 0 ? 2 : 3] : quad[rot_alpha > 0 ? 1 : 3];
      const double tol = 1e-14 * (1.0 + std::abs(plus.coefficient));
      if (std::abs(plus.coefficient + minus.coefficient) > tol) {
        throw InvalidArgument("cross terms are not antisymmetric in the projection sign");
      }
      return 8.0 * plus.coefficient;
    };
    // Rz(+pi/2) is the rotation with alpha = -1.
    for (int rot_alpha : {-1, 1}) {
      const LocalInstrument rz{A::Rz, -rot_alpha * half_pi};
      const double w = weight_for_rotation(rot_alpha);
      if (fam == 0) {
        groups.push_back({w, meas, rz});
      } else {
        groups.push_back({w, rz, meas});
      }
    }
  }
  return groups;
}

double gamma_from_grouping(std::span<const GroupedInstrument> groups) {
  double g = 0.0;
  for (const auto& inst : groups) g += std::abs(inst.weight);
  return g;
}

DensityMatrix reconstruct_channel(std::span<const GroupedInstrument> groups,
                                  const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw InvalidArgument("reconstruct_channel needs a two-qubit state");
  DensityMatrix out = DensityMatrix::zero(2);
  for (const auto& g : groups) {
    DensityMatrix r = rho;
    apply_local(r, 0, g.side_a);
    apply_local(r, 1, g.side_b);
    out += g.weight * r;
  }
  return out;
}

SimplifiedTerm simplify_projected(const QpdTerm& term, double beta, ProjectedState state) {
  if (state != ProjectedState::ProductStateAsserted) {
    throw InvalidArgument(
        "simplify_projected refuses to run: the product-state precondition on the "
        "projected qubit was not asserted");
  }
  if (!std::isfinite(beta)) throw InvalidArgument("beta must be finite");
  if (term.family != TermFamily::ProjRot && term.family != TermFamily::RotProj) {
    throw InvalidArgument("only projection-bearing terms can be simplified");
  }
  const bool proj_a = term.family == TermFamily::ProjRot;
  const int alpha = proj_a ? term.alpha_a : term.alpha_b;
  const double c = std::cos(beta);
  const double s = std::sin(beta);

  SimplifiedTerm out;
  out.coefficient = term.coefficient;
  out.classical_factor = alpha > 0 ? c * c : s * s;
  out.fixed_bit = alpha > 0 ? 0 : 1;
  out.rz_sign = alpha > 0 ? 1 : -1;
  out.projected_is_a = proj_a;
  out.partner_op = proj_a ? term.op_b : term.op_a;
  out.scale = 8.0;
  return out;
}

double reconstruct_expectation(std::span<const std::pair<double, double>> values) {
  if (values.empty()) throw InvalidArgument("reconstruct_expectation needs at least one term");
  double total = 0.0;
  for (auto [coefficient, value] : values) total += coefficient * value;
  return total;
}

}  // namespace vtqg
