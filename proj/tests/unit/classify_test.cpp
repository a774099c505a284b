// Copyright 2026 The lattice-orbit Authors
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

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lattice_orbit/enumerate.hpp"
#include "lattice_orbit/error.hpp"

namespace lattice_orbit {
namespace {

using testing::code_of;
using testing::Gen;

const LatticePtr& L() { return builtin::lminus(); }

LatticeVector tail(Int b1, Int b2) {
  Coords c(12, 0);
  c[10] = b1;
  c[11] = b2;
  return LatticeVector(L(), std::move(c));
}

LatticeVector u2(Int x, Int y) {
  Coords c(12, 0);
  c[8] = x;
  c[9] = y;
  return LatticeVector(L(), std::move(c));
}

LatticeVector plus_u2(Int x, Int y) {
  Coords c(10, 0);
  c[8] = x;
  c[9] = y;
  return LatticeVector(builtin::lplus(), std::move(c));
}

TEST(Classify, OddCase) {
  const auto r = classify(tail(1, 5));
  EXPECT_EQ(r.norm, 10);
  EXPECT_EQ(r.half_n, 5);
  EXPECT_EQ(r.label, OrbitLabel::OddOrbit);
  EXPECT_EQ(r.type_in_lattice, VectorType::Ordinary);
}

TEST(Classify, EvenOrdinaryCase) {
  const auto r = classify(tail(1, 4));
  EXPECT_EQ(r.norm, 8);
  EXPECT_EQ(r.half_n, 4);
  EXPECT_EQ(r.label, OrbitLabel::EvenOrdinary);
  EXPECT_FALSE(r.phi_integral);
  EXPECT_EQ(r.type_in_lattice, VectorType::Ordinary);
  EXPECT_EQ(r.image_type, VectorType::Characteristic);
}

TEST(Classify, EvenCharacteristicCase) {
  const auto r = classify(u2(1, 2));
  EXPECT_EQ(r.norm, 8);
  EXPECT_EQ(r.label, OrbitLabel::EvenCharacteristic);
  EXPECT_TRUE(r.phi_integral);
  EXPECT_EQ(r.type_in_lattice, VectorType::Characteristic);
  EXPECT_EQ(r.image_type, VectorType::Ordinary);
}

TEST(Classify, Errors) {
  EXPECT_EQ(code_of([] { classify(tail(2, 4)); }), ErrorCode::NonPrimitive);
  EXPECT_EQ(code_of([] { classify(LatticeVector(L())); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([] { classify(LatticeVector(builtin::u_i11(), {1, 0, 0, 0})); }),
            ErrorCode::LatticeShapeMismatch);
}

TEST(Classify, Labels) {
  for (auto l : {OrbitLabel::OddOrbit, OrbitLabel::EvenCharacteristic, OrbitLabel::EvenOrdinary})
    EXPECT_EQ(parse_label(to_string(l)), l);
  EXPECT_EQ(parse_label("characteristic"), OrbitLabel::EvenCharacteristic);
  EXPECT_EQ(parse_label("ordinary"), OrbitLabel::EvenOrdinary);
  EXPECT_EQ(code_of([] { parse_label("even"); }), ErrorCode::InvalidArgument);
}

TEST(Classify, RepresentativeExamples) {
  EXPECT_EQ(representative(10, OrbitLabel::OddOrbit), tail(1, 5));
  EXPECT_EQ(representative(8, OrbitLabel::EvenCharacteristic), u2(1, 2));
  const LatticeVector zero_rep = representative(0, OrbitLabel::EvenCharacteristic);
  EXPECT_EQ(zero_rep, u2(1, 0));
  EXPECT_EQ(norm(zero_rep), 0);
  EXPECT_TRUE(is_primitive(zero_rep));
  EXPECT_EQ(code_of([] { representative(5, OrbitLabel::OddOrbit); }), ErrorCode::OddNormInEvenLattice);
  EXPECT_EQ(code_of([] { representative(8, OrbitLabel::OddOrbit); }), ErrorCode::LabelParityMismatch);
  EXPECT_EQ(code_of([] { representative(6, OrbitLabel::EvenOrdinary); }), ErrorCode::LabelParityMismatch);
}

TEST(Classify, RepresentativesCarryTheirLabels) {
  for (Int n = -20; n <= 20; ++n) {
    const auto labels = is_odd(n) ? std::vector{OrbitLabel::OddOrbit}
                                  : std::vector{OrbitLabel::EvenCharacteristic, OrbitLabel::EvenOrdinary};
    for (auto label : labels)
      for (const auto& l : {L(), builtin::u2u()}) {
        const LatticeVector r = representative(l, 2 * n, label);
        ASSERT_TRUE(is_primitive(r));
        ASSERT_EQ(norm(r), 2 * n);
        ASSERT_EQ(classify(r).label, label);
      }
  }
}

TEST(Classify, TripleAgreementExhaustiveRankFour) {
  for_each_in_box(4, 6, [](const Coords& c) {
    const LatticeVector v(builtin::u2u(), c);
    if (v.is_zero() || !is_primitive(v)) return;
    const auto r = classify(v);  // throws on disagreement
    if (floor_mod(r.norm, 4) == 0) ASSERT_EQ(is_even_type(v), r.label == OrbitLabel::EvenCharacteristic);
  });
}

TEST(Classify, TripleAgreementRandomLminus) {
  Gen g(3);
  for (int i = 0; i < 10000; ++i) {
    const LatticeVector v = g.primitive_even_n(L(), 6);
    const auto r = classify(v);
    const bool b_even = !is_odd(v[10]) && !is_odd(v[11]);
    ASSERT_EQ(r.type_in_lattice == VectorType::Characteristic, b_even);
    ASSERT_EQ(r.phi_integral, b_even);
    ASSERT_EQ(is_even_type(v), r.label == OrbitLabel::EvenCharacteristic);
  }
}

TEST(Classify, EmbeddingExamples) {
  for (Int k = -3; k <= 3; ++k) {
    Coords expect_minus(22, 0), expect_plus(22, 0);
    expect_minus[16] = k;
    expect_minus[17] = 1;
    expect_minus[18] = -k;
    expect_minus[19] = -1;
    expect_plus[16] = expect_plus[18] = k;
    expect_plus[17] = expect_plus[19] = 1;
    EXPECT_EQ(embed_minus(u2(k, 1)).coords(), expect_minus);
    EXPECT_EQ(embed_plus(plus_u2(k, 1)).coords(), expect_plus);
  }
  EXPECT_TRUE(embed_minus(LatticeVector(L())).is_zero());
  EXPECT_TRUE(embed_plus(LatticeVector(builtin::lplus())).is_zero());
  EXPECT_EQ(code_of([] { embed_minus(LatticeVector(builtin::u2u())); }), ErrorCode::LatticeShapeMismatch);
  EXPECT_EQ(code_of([] { embed_plus(LatticeVector(L())); }), ErrorCode::LatticeShapeMismatch);
}

TEST(Classify, EmbeddingsAreOrthogonalIsometries) {
  Gen g(4);
  for (int i = 0; i < 1000; ++i) {
    const LatticeVector v = g.vector(L(), 5), v2 = g.vector(L(), 5);
    const LatticeVector w = g.vector(builtin::lplus(), 5), w2 = g.vector(builtin::lplus(), 5);
    ASSERT_EQ(norm(embed_minus(v)), norm(v));
    ASSERT_EQ(norm(embed_plus(w)), norm(w));
    ASSERT_EQ(inner(embed_minus(v), embed_minus(v2)), inner(v, v2));
    ASSERT_EQ(inner(embed_plus(w), embed_plus(w2)), inner(w, w2));
    ASSERT_EQ(inner(embed_minus(v), embed_plus(w)), 0);
  }
}

TEST(Classify, EvenTypeExamples) {
  EXPECT_TRUE(is_even_type(u2(1, 1)));
  EXPECT_FALSE(is_even_type(tail(2, 1)));
  EXPECT_EQ(code_of([] { is_even_type(tail(1, 5)); }), ErrorCode::EvenTypeUndefinedForOddN);
  EXPECT_EQ(code_of([] { is_even_type(tail(2, 4)); }), ErrorCode::NonPrimitive);
}

TEST(Classify, WitnessExamples) {
  const auto r = even_witness(u2(2, 1), 1);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, plus_u2(2, 1));
  EXPECT_TRUE(r.from_representative);
  Coords sum(22, 0);
  sum[16] = 4;
  sum[17] = 2;
  const LatticeVector a = embed_minus(u2(2, 1)), b = embed_plus(*r.witness);
  for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(a[i] + b[i], sum[i]);

  for (Int bound : {1, 2, 3}) {
    const auto none = even_witness(tail(2, 1), bound);
    EXPECT_FALSE(none.witness);
    EXPECT_TRUE(none.parity_obstruction);
  }

  const auto zero = even_witness(u2(1, 0), 1);
  ASSERT_TRUE(zero.witness);
  EXPECT_EQ(*zero.witness, plus_u2(1, 0));
  EXPECT_TRUE(sum_in_2lambda(u2(1, 0), plus_u2(1, 0)));

  EXPECT_EQ(code_of([] { even_witness(tail(1, 5), 2); }), ErrorCode::EvenTypeUndefinedForOddN);
  EXPECT_EQ(code_of([] { even_witness(u2(1, 0), 0); }), ErrorCode::InvalidArgument);
}

TEST(Classify, WitnessFamilies) {
  for (Int k = -5; k <= 5; ++k) {
    const auto found = even_witness(u2(k, 1), 2);
    ASSERT_TRUE(found.witness) << k;
    EXPECT_TRUE(sum_in_2lambda(u2(k, 1), *found.witness));
    const auto none = even_witness(tail(2 * k, 1), 2);
    EXPECT_FALSE(none.witness);
    EXPECT_TRUE(none.parity_obstruction);
  }
}

// Whatever the search returns must pass the verifier; searching also exercises
// vectors outside the shortcut.
TEST(Classify, WitnessSoundness) {
  Gen g(8);
  std::size_t searched = 0, found = 0;
  for (int i = 0; i < 60; ++i) {
    Coords c = g.coords(12, 1);
    c[10] = 2 * g.uniform(-1, 1);
    c[11] = 2 * g.uniform(-1, 1);
    const LatticeVector v(L(), c);
    if (v.is_zero() || !is_primitive(v) || floor_mod(norm(v), 4) != 0) continue;
    const auto r = even_witness(v, 1);
    searched += !r.from_representative;
    if (!r.witness) continue;
    ++found;
    ASSERT_TRUE(is_primitive(*r.witness));
    ASSERT_EQ(norm(*r.witness), norm(v));
    ASSERT_TRUE(sum_in_2lambda(v, *r.witness));
  }
  EXPECT_GT(searched, 0u);
  EXPECT_GT(found, 0u);
}

TEST(Classify, HeegnerReports) {
  const auto reports = heegner_report(-2, 5);
  ASSERT_EQ(reports.size(), 8u);
  for (const auto& rep : reports) {
    EXPECT_EQ(rep.component_count(), is_odd(rep.n) ? 1u : 2u);
    for (const auto& c : rep.components) {
      EXPECT_EQ(norm(c.representative), 2 * rep.n);
      EXPECT_EQ(classify(c.representative).label, c.label);
    }
  }
  EXPECT_EQ(reports[2].n, 0);
  EXPECT_EQ(reports[2].component_count(), 2u);
  EXPECT_EQ(reports[6].components[0].label, OrbitLabel::EvenCharacteristic);
  EXPECT_EQ(reports[6].components[1].label, OrbitLabel::EvenOrdinary);
  EXPECT_EQ(code_of([] { heegner_report(3, 2); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace lattice_orbit
