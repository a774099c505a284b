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

LatticeVector basis(const LatticePtr& l, std::size_t i, Int scale = 1) {
  Coords c(l->rank(), 0);
  c[i] = scale;
  return LatticeVector(l, std::move(c));
}

LatticeVector tail(Int b1, Int b2) {
  Coords c(12, 0);
  c[10] = b1;
  c[11] = b2;
  return LatticeVector(L(), std::move(c));
}

void expect_certified(const Isometry& g) {
  const IntMatrix& m = g.matrix();
  EXPECT_EQ(m.transpose() * g.lattice()->gram() * m, g.lattice()->gram());
  EXPECT_EQ(std::abs(determinant(m)), 1);
  EXPECT_EQ(determinant(m), g.det());
}

TEST(Isometry, CertifyExamples) {
  expect_certified(Isometry::certify(L(), IntMatrix::identity(12)));
  for (const auto& l : testing::all_builtins())
    expect_certified(Isometry::certify(l, scaled(IntMatrix::identity(l->rank()), -1)));
  IntMatrix swap = IntMatrix::identity(12);
  swap(10, 10) = swap(11, 11) = 0;
  swap(10, 11) = swap(11, 10) = 1;
  const Isometry s = Isometry::certify(L(), swap);
  EXPECT_EQ(s.det(), -1);
  EXPECT_EQ(apply(s, tail(1, 3)), tail(3, 1));
}

TEST(Isometry, CertifyRejects) {
  IntMatrix m = IntMatrix::identity(12);
  m(0, 0) = 2;
  EXPECT_EQ(code_of([&] { Isometry::certify(L(), m); }), ErrorCode::NotIsometry);
  EXPECT_EQ(code_of([] { Isometry::certify(L(), IntMatrix::identity(4)); }), ErrorCode::NotIsometry);
  // Preserves the degenerate form but is not invertible over Z.
  const auto deg = std::make_shared<const Lattice>("deg", IntMatrix{{0, 0}, {0, 0}});
  EXPECT_EQ(code_of([&] { Isometry::certify(deg, IntMatrix{{2, 0}, {0, 1}}); }), ErrorCode::NotIsometry);
}

TEST(Isometry, ReflectionSwapsHyperbolicPair) {
  const LatticeVector delta = tail(1, -1);
  EXPECT_EQ(norm(delta), -2);
  const Isometry s = reflection(delta);
  expect_certified(s);
  EXPECT_EQ(apply(s, basis(L(), 10)), basis(L(), 11));
  EXPECT_EQ(apply(s, tail(1, 3)), tail(3, 1));
}

TEST(Isometry, ReflectionInTwistedSummands) {
  // A root of E8 doubled into E8(2) has norm -4.
  const LatticeVector r = basis(L(), 0);
  EXPECT_EQ(norm(r), -4);
  expect_certified(reflection(r));
  Coords c(12, 0);
  c[8] = c[9] = 1;
  const LatticeVector d(L(), c);
  EXPECT_EQ(norm(d), 4);
  expect_certified(reflection(d));
}

TEST(Isometry, ReflectionErrors) {
  EXPECT_EQ(code_of([] { reflection(basis(L(), 10)); }), ErrorCode::IsotropicReflectionVector);
  // (1,1) in U(2) plus v in U has norm 4 but pairs to 1 with u.
  Coords c(12, 0);
  c[8] = c[9] = 1;
  c[11] = 1;
  EXPECT_EQ(norm(LatticeVector(L(), c)), 4);
  EXPECT_EQ(code_of([&] { reflection(LatticeVector(L(), c)); }), ErrorCode::NotIntegralReflection);
}

TEST(Isometry, EichlerExamples) {
  const LatticeVector u = basis(L(), 10), v = basis(L(), 11);
  EXPECT_EQ(eichler(u, LatticeVector(L())), Isometry::identity(L()));
  const Isometry t = eichler(u, basis(L(), 0));
  expect_certified(t);
  const IntMatrix& m = t.matrix();
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      if (i == j) continue;
      if (m(i, j) != 0) {
        EXPECT_TRUE(i < 8 || i >= 10) << i;
        EXPECT_TRUE(j < 8 || j >= 10) << j;
      }
    }
  EXPECT_EQ(code_of([&] { eichler(u, v); }), ErrorCode::NotOrthogonal);
  EXPECT_EQ(code_of([&] { eichler(tail(1, 1), LatticeVector(L())); }), ErrorCode::NotIsotropic);
  const auto ui = builtin::u_i11();
  EXPECT_EQ(code_of([&] { eichler(basis(ui, 0), LatticeVector(ui)); }), ErrorCode::OddLattice);
}

TEST(Isometry, ApplyExamples) {
  Gen g(9);
  const LatticeVector v = g.vector(L(), 4);
  EXPECT_EQ(apply(Isometry::identity(L()), v), v);
  EXPECT_EQ(code_of([&] { apply(Isometry::identity(L()), LatticeVector(builtin::u2u())); }),
            ErrorCode::LatticeMismatch);
}

TEST(Isometry, ReflectionIsInvolution) {
  const auto gens = GeneratorSet::for_lattice(L());
  ASSERT_FALSE(gens.reflections().empty());
  for (const auto& r : gens.reflections()) {
    ASSERT_EQ(r * r, Isometry::identity(L()));
    ASSERT_EQ(r.det(), -1);
  }
}

TEST(Isometry, EichlerIsAdditiveInX) {
  Gen g(11);
  const LatticeVector e = basis(L(), 10);
  for (int i = 0; i < 300; ++i) {
    // x and y orthogonal to u: zero coefficient on v.
    Coords cx = g.coords(12, 2), cy = g.coords(12, 2);
    cx[11] = cy[11] = 0;
    Coords sum(12);
    for (std::size_t k = 0; k < 12; ++k) sum[k] = cx[k] + cy[k];
    const LatticeVector x(L(), cx), y(L(), cy);
    ASSERT_EQ(eichler(e, x) * eichler(e, y), eichler(e, LatticeVector(L(), sum)));
  }
}

TEST(Isometry, ApplyPreservesStructure) {
  Gen g(12);
  for (int i = 0; i < 10000; ++i) {
    const Isometry w = sample_word(L(), 1000 + i % 64, 4);
    const LatticeVector v = g.nonzero(L(), 4), x = g.vector(L(), 4);
    const LatticeVector gv = apply(w, v), gx = apply(w, x);
    ASSERT_EQ(norm(gv), norm(v));
    ASSERT_EQ(inner(gv, gx), inner(v, x));
    ASSERT_EQ(is_primitive(gv), is_primitive(v));
    ASSERT_EQ(vector_type(gv), vector_type(v));
  }
}

TEST(Isometry, SampleWordContracts) {
  EXPECT_EQ(sample_word(L(), 1, 0), Isometry::identity(L()));
  EXPECT_EQ(sample_word(L(), 77, 8), sample_word(L(), 77, 8));
  EXPECT_NE(sample_word(L(), 77, 8), sample_word(L(), 78, 8));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) expect_certified(sample_word(L(), seed, 8));
}

TEST(Isometry, RecipesForBuiltins) {
  for (const auto& l : {builtin::lminus(), builtin::u2u(), builtin::u_i11(), builtin::e8_u_i11(),
                        make_I(2, 2), make_I(3, 1)}) {
    const auto gens = GeneratorSet::for_lattice(l);
    for (std::uint64_t seed = 0; seed < 50; ++seed) expect_certified(gens.sample_word(seed, 6));
  }
  EXPECT_GT(GeneratorSet::for_lattice(L()).eichler_planes(), 0u);
  EXPECT_EQ(code_of([] { GeneratorSet::for_lattice(builtin::lambda()); }), ErrorCode::NoGeneratorRecipe);
  EXPECT_EQ(code_of([] { GeneratorSet::for_lattice(make_E8()); }), ErrorCode::NoGeneratorRecipe);
}

TEST(Isometry, DrawBelowIsUniformEnough) {
  std::mt19937_64 rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[draw_below(rng, 7)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(code_of([&] { draw_below(rng, 0); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace lattice_orbit
