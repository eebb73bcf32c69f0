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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vtqg/errors.hpp"
#include "vtqg/fragments.hpp"
#include "vtqg/pauli.hpp"
#include "vtqg/qpd.hpp"
#include "vtqg/rng.hpp"
#include "vtqg/sampling.hpp"
#include "vtqg/simulator.hpp"
#include "vtqg/text_format.hpp"
#include "vtqg/tfim.hpp"

namespace {

using namespace vtqg;
using oracle::Mat;

constexpr double kPi = std::numbers::pi;

std::vector<double> coefficients(double theta) {
  std::vector<double> c;
  for (const auto& t : decompose_vrzz(theta)) c.push_back(t.coefficient);
  return c;
}

// exp(+i theta/2 Z(x)Z) rho exp(-i theta/2 Z(x)Z)
Mat exact_conjugation(const Mat& rho, double theta) {
  const Mat u = (oracle::kI * (theta / 2.0) * oracle::pauli_string("ZZ")).exp();
  return u * rho * u.adjoint();
}

TEST(DecomposeVrzz, TenTermsInFixedOrder) {
  const auto terms = decompose_vrzz(0.787);
  ASSERT_EQ(terms.size(), 10u);
  EXPECT_EQ(terms[0].family, TermFamily::II);
  EXPECT_EQ(terms[1].family, TermFamily::ZZ);
  const std::vector<std::pair<int, int>> alphas{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(terms[2 + k].family, TermFamily::ProjRot);
    EXPECT_EQ(terms[6 + k].family, TermFamily::RotProj);
    EXPECT_EQ(std::make_pair(terms[2 + k].alpha_a, terms[2 + k].alpha_b), alphas[k]);
    EXPECT_EQ(terms[2 + k].op_a, FragmentOp::project(alphas[k].first));
    EXPECT_EQ(terms[2 + k].op_b, FragmentOp::rotate(alphas[k].second));
    EXPECT_EQ(terms[6 + k].op_a, FragmentOp::rotate(alphas[k].first));
    EXPECT_EQ(terms[6 + k].op_b, FragmentOp::project(alphas[k].second));
  }
}

TEST(DecomposeVrzz, ZeroAngleIsIdentityOnly) {
  const auto c = coefficients(0.0);
  EXPECT_DOUBLE_EQ(c[0], 1.0);
  for (std::size_t k = 1; k < 10; ++k) EXPECT_DOUBLE_EQ(c[k], 0.0);
}

TEST(DecomposeVrzz, PiIsZzOnly) {
  const auto c = coefficients(kPi);
  EXPECT_NEAR(c[0], 0.0, 1e-15);
  EXPECT_NEAR(c[1], 1.0, 1e-15);
  for (std::size_t k = 2; k < 10; ++k) EXPECT_NEAR(c[k], 0.0, 1e-15);
}

TEST(DecomposeVrzz, QuarterTurnCoefficients) {
  const auto terms = decompose_vrzz(kPi / 2);
  EXPECT_NEAR(terms[0].coefficient, 0.5, 1e-15);
  EXPECT_NEAR(terms[1].coefficient, 0.5, 1e-15);
  for (std::size_t k = 2; k < 10; ++k) {
    EXPECT_NEAR(terms[k].coefficient, terms[k].alpha_a * terms[k].alpha_b / 16.0, 1e-15);
  }
}

TEST(DecomposeVrzz, CoefficientNormalization) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 50; ++i) {
    const auto c = coefficients(angle(rng));
    EXPECT_NEAR(c[0] + c[1], 1.0, 1e-15);
    double cross = 0.0;
    for (std::size_t k = 2; k < 10; ++k) cross += c[k];
    EXPECT_EQ(cross, 0.0);
  }
  EXPECT_THROW(decompose_vrzz(std::nan("")), InvalidArgument);
}

TEST(DecompositionAngle, FlipsSignOfGateAngle) {
  EXPECT_DOUBLE_EQ(decomposition_angle(-0.787), 0.787);
  EXPECT_DOUBLE_EQ(decomposition_angle(TfimParams{}.rzz_angle()), 0.787);
}

TEST(ReconstructChannel, MaximallyMixedIsFixed) {
  const Mat mixed = Mat::Identity(4, 4) / 4.0;
  for (double t : {0.3, 1.7, -2.5}) {
    const auto terms = decompose_vrzz(t);
    const Mat out = oracle::to_eigen(reconstruct_channel(terms, oracle::from_eigen(mixed)));
    EXPECT_LT((out - mixed).norm(), 1e-15);
  }
}

TEST(ReconstructChannel, EigenstateIsFixed) {
  const DensityMatrix zero(2);
  const auto out = reconstruct_channel(decompose_vrzz(kPi / 2), zero);
  EXPECT_LT(out.distance(zero), 1e-15);
}

TEST(ReconstructChannel, MatchesMatrixExponential) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    const double theta = angle(rng);
    const auto terms = decompose_vrzz(theta);
    const auto groups = group_for_sampling(terms);
    for (int j = 0; j < 50; ++j) {
      const Mat rho = oracle::random_density(2, rng);
      const Mat expected = exact_conjugation(rho, theta);
      const DensityMatrix in = oracle::from_eigen(rho);
      EXPECT_LT((oracle::to_eigen(reconstruct_channel(terms, in)) - expected).norm(), 1e-10);
      EXPECT_LT((oracle::to_eigen(reconstruct_channel(groups, in)) - expected).norm(), 1e-10);
    }
  }
}

TEST(ReconstructChannel, RejectsWrongDimension) {
  EXPECT_THROW(reconstruct_channel(decompose_vrzz(0.1), DensityMatrix(3)), InvalidArgument);
}

TEST(Gamma, ClosedFormAndGroupedOneNorm) {
  EXPECT_DOUBLE_EQ(vtqg::gamma(0.0), 1.0);
  EXPECT_DOUBLE_EQ(vtqg::gamma(kPi / 2), 3.0);
  EXPECT_NEAR(vtqg::gamma(0.787), 1.0 + 2.0 * std::sin(0.787), 1e-15);
  EXPECT_NEAR(vtqg::gamma(0.787), 2.41647708610125, 1e-12);
  EXPECT_NEAR(gamma_from_grouping(group_for_sampling(decompose_vrzz(0.787))), 2.41647708610125,
              1e-12);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    const double t = angle(rng);
    EXPECT_NEAR(gamma_from_grouping(group_for_sampling(decompose_vrzz(t))),
                1.0 + 2.0 * std::abs(std::sin(t)), 1e-12);
  }
}

TEST(GroupForSampling, SixInstrumentsInOrder) {
  const auto g = group_for_sampling(decompose_vrzz(0.787));
  ASSERT_EQ(g.size(), 6u);
  using A = LocalInstrument::Action;
  EXPECT_EQ(g[0].side_a.action, A::Identity);
  EXPECT_EQ(g[1].side_a.action, A::Z);
  EXPECT_EQ(g[2].side_a.action, A::SignedMeasure);
  EXPECT_EQ(g[2].side_b, (LocalInstrument{A::Rz, kPi / 2}));
  EXPECT_EQ(g[3].side_b, (LocalInstrument{A::Rz, -kPi / 2}));
  EXPECT_EQ(g[4].side_a, (LocalInstrument{A::Rz, kPi / 2}));
  EXPECT_EQ(g[5].side_b.action, A::SignedMeasure);
  const double cs = std::cos(0.787 / 2) * std::sin(0.787 / 2);
  EXPECT_NEAR(g[2].weight, -cs, 1e-15);
  EXPECT_NEAR(g[3].weight, cs, 1e-15);
}

TEST(GroupForSampling, ZeroAngleLeavesOnlyIdentity) {
  const auto g = group_for_sampling(decompose_vrzz(0.0));
  EXPECT_DOUBLE_EQ(g[0].weight, 1.0);
  for (std::size_t k = 1; k < 6; ++k) EXPECT_DOUBLE_EQ(g[k].weight, 0.0);
}

TEST(GroupForSampling, RejectsMalformedTerms) {
  auto terms = decompose_vrzz(0.5);
  EXPECT_THROW(group_for_sampling(std::span(terms).first(9)), InvalidArgument);
  auto swapped = terms;
  std::swap(swapped[0], swapped[1]);
  EXPECT_THROW(group_for_sampling(swapped), InvalidArgument);
  auto skewed = terms;
  skewed[3].coefficient *= 2.0;
  EXPECT_THROW(group_for_sampling(skewed), InvalidArgument);
}

// Grouped instruments executed as shot circuits reproduce <Z(x)Z> after
// the cut gate on random product states.
TEST(GroupForSampling, SampledZzMatchesExactChannel) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const std::size_t shots = 100000;
  for (int trial = 0; trial < 3; ++trial) {
    Circuit base(2);
    for (Qubit q : {0, 1}) {
      base.append(Gate::rx(q, angle(rng))).append(Gate::rz(q, angle(rng)));
      base.append(Gate::rx(q, angle(rng)));
    }
    const double gate_angle = angle(rng);
    const std::vector<CutSite> cuts{{base.size(), 0, 1, gate_angle}};
    const auto frags = build_fragments(base, cuts, {FragmentMode::Grouped, false});
    ASSERT_EQ(frags.size(), 6u);

    double estimate = 0.0, variance = 0.0;
    for (const auto& f : frags) {
      const double w = f.coefficient * f.scale;
      if (w == 0.0) continue;
      const auto outcomes = sample_shots(f.circuit, shots, derive_seed(trial, f.index));
      double sum = 0.0, sq = 0.0;
      for (const auto& s : outcomes) {
        const double parity = (((s.bits ^ (s.bits >> 1)) & 1u) ? -1.0 : 1.0);
        const double v = s.sign * parity;
        sum += v;
        sq += v * v;
      }
      const double mean = sum / shots;
      estimate += w * mean;
      variance += w * w * (sq / shots - mean * mean) / shots;
    }

    Circuit with_gate = base;
    with_gate.append(Gate::rzz(0, 1, gate_angle));
    PauliObservable zz(2);
    zz.add("ZZ");
    const double exact = expectation(run_density(with_gate), zz);
    EXPECT_NEAR(estimate, exact, 4 * std::sqrt(variance)) << "trial " << trial;
  }
}

TEST(SimplifyProjected, ClassicalFactors) {
  const auto terms = decompose_vrzz(0.787);
  const auto asserted = ProjectedState::ProductStateAsserted;
  EXPECT_DOUBLE_EQ(simplify_projected(terms[2], 0.0, asserted).classical_factor, 1.0);
  EXPECT_NEAR(simplify_projected(terms[2], kPi / 2, asserted).classical_factor, 0.0, 1e-15);
  EXPECT_NEAR(simplify_projected(terms[2], 0.393, asserted).classical_factor, 0.8533405452048967,
              1e-15);
  EXPECT_NEAR(simplify_projected(terms[4], 0.393, asserted).classical_factor,
              std::sin(0.393) * std::sin(0.393), 1e-15);
}

TEST(SimplifyProjected, FixedBitAndPartnerRotation) {
  const auto terms = decompose_vrzz(0.787);
  const auto asserted = ProjectedState::ProductStateAsserted;
  const SimplifiedTerm plus = simplify_projected(terms[2], 0.393, asserted);
  EXPECT_EQ(plus.fixed_bit, 0);
  EXPECT_EQ(plus.rz_sign, 1);
  EXPECT_TRUE(plus.projected_is_a);
  EXPECT_EQ(plus.partner_op, FragmentOp::rotate(1));
  EXPECT_DOUBLE_EQ(plus.scale, 8.0);
  const SimplifiedTerm minus = simplify_projected(terms[9], 0.393, asserted);
  EXPECT_EQ(minus.fixed_bit, 1);
  EXPECT_EQ(minus.rz_sign, -1);
  EXPECT_FALSE(minus.projected_is_a);
}

// RZZ(t) on a qubit fixed to |b> acts on its partner as RZ((-1)^b t).
TEST(SimplifyProjected, PartnerRotationMatchesOracle) {
  for (int bit : {0, 1}) {
    const double t = 0.61;
    const Mat u = oracle::expm_pauli("ZZ", t);
    const Mat rz = oracle::expm_pauli("Z", (bit ? -1 : 1) * t);
    for (int other = 0; other < 2; ++other) {
      const auto idx = static_cast<std::size_t>((bit << 1) | other);
      // u acts on |q0 q1> with q0 the more significant local bit
      EXPECT_NEAR(std::abs(u(idx, idx) - rz(other, other)), 0.0, 1e-15);
    }
  }
}

TEST(SimplifyProjected, RefusesWithoutAssertionOrProjection) {
  const auto terms = decompose_vrzz(0.787);
  EXPECT_THROW(simplify_projected(terms[2], 0.393, ProjectedState::Unverified), InvalidArgument);
  EXPECT_THROW(simplify_projected(terms[0], 0.393, ProjectedState::ProductStateAsserted),
               InvalidArgument);
  EXPECT_THROW(simplify_projected(terms[1], 0.393, ProjectedState::ProductStateAsserted),
               InvalidArgument);
}

double fragment_value(const FragmentCircuit& f, const PauliObservable& obs) {
  double v = 0.0;
  for (const auto& br : run_density_branches(f.circuit, nullptr, f.postselect)) {
    v += register_sign(f.circuit, br.clbits) * expectation(br.state, obs);
  }
  return f.coefficient * f.scale * v;
}

TEST(SimplifyProjected, SimplifiedFragmentsMatchFullEvaluation) {
  TfimParams p;
  p.n_qubits = 4;
  const TrotterCircuit tc = build_trotter_circuit(p, Variant::Vtqg);
  const auto full = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Enumerated, false});
  const auto simple = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Enumerated, true});
  ASSERT_EQ(full.size(), simple.size());
  std::size_t absorbed = 0;
  for (std::size_t k = 0; k < full.size(); ++k) {
    absorbed += simple[k].simplified;
    for (std::size_t q = 0; q < 4; ++q) {
      for (char c : {'X', 'Y', 'Z'}) {
        const auto obs = PauliObservable::single(4, tc.layout.physical(q), c);
        EXPECT_NEAR(fragment_value(simple[k], obs), fragment_value(full[k], obs), 1e-10)
            << "fragment " << k << " " << c << q;
      }
    }
  }
  EXPECT_EQ(absorbed, 8u);
  for (std::size_t k = 2; k < 10; ++k) {
    EXPECT_TRUE(simple[k].postselect.empty());
    EXPECT_EQ(count_gates(simple[k].circuit)[GateKind::MeasureZ], 0u);
  }
}

TEST(ReconstructExpectation, WeightedSum) {
  const std::vector<std::pair<double, double>> one{{1.0, 0.7}};
  EXPECT_DOUBLE_EQ(reconstruct_expectation(one), 0.7);
  const std::vector<std::pair<double, double>> cancel{{0.5, 1.0}, {0.5, -1.0}};
  EXPECT_DOUBLE_EQ(reconstruct_expectation(cancel), 0.0);
  EXPECT_THROW(reconstruct_expectation({}), InvalidArgument);
}

TEST(ReconstructExpectation, TenTermTfimComponentsMatchStatevector) {
  TfimParams p;
  p.n_qubits = 4;
  const TrotterCircuit tc = build_trotter_circuit(p, Variant::Vtqg);
  const auto frags = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Enumerated, false});
  ASSERT_EQ(frags.size(), 10u);
  const BlochComponents ref = exact_components(p);
  for (std::size_t q = 0; q < 4; ++q) {
    const auto obs = PauliObservable::single(4, tc.layout.physical(q), 'Z');
    std::vector<std::pair<double, double>> values;
    for (const auto& f : frags) {
      values.emplace_back(f.coefficient, fragment_value(f, obs) / f.coefficient);
    }
    EXPECT_NEAR(reconstruct_expectation(values), ref.z[q], 1e-9);
  }
}

TEST(Fragments, CountLaw) {
  EXPECT_EQ(fragment_count(0, FragmentMode::Enumerated), 1u);
  EXPECT_EQ(fragment_count(1, FragmentMode::Enumerated), 10u);
  EXPECT_EQ(fragment_count(2, FragmentMode::Enumerated), 100u);
  EXPECT_EQ(fragment_count(1, FragmentMode::Grouped), 6u);
  EXPECT_EQ(fragment_count(3, FragmentMode::Grouped), 216u);
}

TEST(Fragments, MixedRadixOrderFirstCutMostSignificant) {
  TfimParams p;
  p.n_qubits = 4;
  p.n_steps = 2;
  const TrotterCircuit tc = build_trotter_circuit(p, Variant::Vtqg);
  ASSERT_EQ(tc.cuts.size(), 2u);
  const auto frags = build_fragments(tc.circuit, tc.cuts);
  ASSERT_EQ(frags.size(), 100u);
  for (std::size_t k = 0; k < frags.size(); ++k) {
    EXPECT_EQ(frags[k].index, k);
    EXPECT_EQ(frags[k].choices[0].term, k / 10);
    EXPECT_EQ(frags[k].choices[1].term, k % 10);
  }
  const auto grouped = build_fragments(tc.circuit, tc.cuts, {FragmentMode::Grouped, false});
  EXPECT_EQ(grouped.size(), 36u);
}

TEST(Fragments, EnumeratedRealization) {
  Circuit base(2);
  base.append(Gate::h(0)).append(Gate::h(1));
  const std::vector<CutSite> cuts{{2, 0, 1, -0.787}};
  const auto frags = build_fragments(base, cuts);
  // P+ on a, R- on b
  const FragmentCircuit& f = frags[3];
  EXPECT_EQ(f.choices[0].label, "P+R-");
  EXPECT_DOUBLE_EQ(f.scale, 8.0);
  EXPECT_EQ(f.postselect.size(), 1u);
  EXPECT_EQ(f.circuit[2].kind(), GateKind::MeasureZ);
  EXPECT_EQ(f.circuit[3].kind(), GateKind::RZ);
  EXPECT_NEAR(f.circuit[3].angle(), kPi / 2, 1e-15);
}

TEST(Fragments, GroupedUsesSignBitsNotPostselection) {
  Circuit base(2);
  base.append(Gate::h(0)).append(Gate::h(1));
  const std::vector<CutSite> cuts{{2, 0, 1, -0.787}};
  const auto frags = build_fragments(base, cuts, {FragmentMode::Grouped, false});
  for (const auto& f : frags) {
    EXPECT_TRUE(f.postselect.empty());
    EXPECT_DOUBLE_EQ(f.scale, 1.0);
  }
  EXPECT_EQ(frags[2].circuit.sign_bits().size(), 1u);
  EXPECT_EQ(frags[0].circuit.sign_bits().size(), 0u);
}

TEST(Fragments, RejectsBadCuts) {
  Circuit base(2);
  base.append(Gate::h(0));
  EXPECT_THROW(build_fragments(base, std::vector<CutSite>{{5, 0, 1, 0.1}}), InvalidArgument);
  EXPECT_THROW(build_fragments(base, std::vector<CutSite>{{0, 1, 1, 0.1}}), InvalidArgument);
  EXPECT_THROW(build_fragments(base, std::vector<CutSite>{{1, 0, 1, 0.1}, {0, 0, 1, 0.1}}),
               InvalidArgument);
}

TEST(Manifest, CarriesEverythingNeededToRerun) {
  TfimParams p;
  p.n_qubits = 4;
  const TrotterCircuit tc = build_trotter_circuit(p, Variant::Vtqg);
  const auto frags = expand_fragments(tc, {FragmentMode::Enumerated, false});
  const auto j = manifest_to_json(frags, tc.cuts);
  ASSERT_EQ(j.at("cuts").size(), 1u);
  EXPECT_DOUBLE_EQ(j["cuts"][0]["decomposition_angle"].get<double>(), 0.787);
  ASSERT_EQ(j.at("fragments").size(), 10u);
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& jf = j["fragments"][k];
    EXPECT_EQ(jf["index"].get<std::size_t>(), k);
    EXPECT_EQ(jf["choices"][0]["term"].get<std::size_t>(), k);
    EXPECT_DOUBLE_EQ(jf["coefficient"].get<double>(), frags[k].coefficient);
    EXPECT_EQ(parse_circuit(jf["circuit"].get<std::string>()), frags[k].circuit);
  }
  EXPECT_EQ(j["fragments"][2]["choices"][0]["family"], "PROJ_ROT");
  EXPECT_EQ(j["fragments"][2]["postselect"]["0"], 0);
}

}  // namespace
