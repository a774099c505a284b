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

#include "lattice_orbit/vector.hpp"

#include <algorithm>
#include <utility>

namespace lattice_orbit {

LatticeVector::LatticeVector(LatticePtr lattice, Coords coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_->rank())
    throw Error(ErrorCode::RankMismatch, "vector of length " + std::to_string(coords_.size()) +
                                             " in " + lattice_->name() + " of rank " +
                                             std::to_string(lattice_->rank()));
}

LatticeVector::LatticeVector(LatticePtr lattice)
    : lattice_(std::move(lattice)), coords_(lattice_->rank(), 0) {}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

std::string_view to_string(VectorType t) {
  return t == VectorType::Characteristic ? "characteristic" : "ordinary";
}

Int norm(const LatticeVector& v) { return inner(*v.lattice(), v.coords(), v.coords()); }

Int inner(const LatticeVector& v, const LatticeVector& w) {
  if (!(*v.lattice() == *w.lattice()))
    throw Error(ErrorCode::LatticeMismatch, v.lattice()->name() + " vs " + w.lattice()->name());
  return inner(*v.lattice(), v.coords(), w.coords());
}

bool is_primitive(const LatticeVector& v) {
  const Int g = gcd_of(v.coords());
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitivity of the zero vector");
  return g == 1;
}

VectorType vector_type(const LatticeVector& v) {
  const Lattice& l = *v.lattice();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    // <v, e_i> = sum_j v_j G_ji, reduced mod 2 term by term.
    Int parity = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) parity ^= (v[j] & l.gram(j, i) & 1);
    if (parity != (l.gram(i, i) & 1)) return VectorType::Ordinary;
  }
  return VectorType::Characteristic;
}

bool characteristic_against(const LatticeVector& v, std::span<const Int> eta) {
  const Lattice& l = *v.lattice();
  return floor_mod(inner(l, v.coords(), eta), 2) == floor_mod(inner(l, eta, eta), 2);
}

VectorType char_fastpath_bi11(const LatticeVector& v) {
  const Lattice& l = *v.lattice();
  const std::size_t n = l.rank();
  if (n < 2) throw Error(ErrorCode::LatticeShapeMismatch, l.name() + " has rank < 2");
  const std::size_t r = n - 2;
  bool shape_ok = l.gram(r, r) == 1 && l.gram(r + 1, r + 1) == -1 && l.gram(r, r + 1) == 0;
  for (std::size_t i = 0; i < r && shape_ok; ++i)
    shape_ok = l.gram(i, r) == 0 && l.gram(i, r + 1) == 0;
  if (shape_ok && l.shape().kind != Shape::Kind::BPlusI11) {
    IntMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b(i, j) = l.gram(i, j);
    const Lattice leading("B", std::move(b));
    shape_ok = r == 0 || (is_even(leading) && is_unimodular(leading));
  }
  if (!shape_ok)
    throw Error(ErrorCode::LatticeShapeMismatch, l.name() + " is not of the form B + I_{1,1}");

  if (!is_odd(v[r]) || !is_odd(v[r + 1])) return VectorType::Ordinary;
  for (std::size_t i = 0; i < r; ++i)
    if (is_odd(v[i])) return VectorType::Ordinary;
  return VectorType::Characteristic;
}

bool wall_congruence_holds(const LatticeVector& v) {
  const Lattice& l = *v.lattice();
  if (!is_unimodular(l)) throw Error(ErrorCode::NotUnimodular, l.name());
  if (vector_type(v) != VectorType::Characteristic)
    throw Error(ErrorCode::NotCharacteristic, "Wall congruence needs a characteristic vector");
  const Signature sig = signature(l);
  const Int diff = static_cast<Int>(sig.positive) - static_cast<Int>(sig.negative);
  return floor_mod(norm(v) - diff, 8) == 0;
}

}  // namespace lattice_orbit
