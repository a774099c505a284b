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

#include "lattice_orbit/dilatation.hpp"

#include <utility>

#include "lattice_orbit/builtins.hpp"

namespace lattice_orbit {

HalfVector::HalfVector(LatticePtr base, Coords doubled_coords)
    : base_(std::move(base)), doubled_(std::move(doubled_coords)) {
  if (base_->shape().kind != Shape::Kind::BPlusI11)
    throw Error(ErrorCode::LatticeShapeMismatch, base_->name() + " is not tagged B + I_{1,1}");
  if (doubled_.size() != base_->rank())
    throw Error(ErrorCode::RankMismatch, "doubled coordinates do not match " + base_->name());
  const std::size_t r = doubled_.size() - 2;
  for (std::size_t i = 0; i < r; ++i)
    if (is_odd(doubled_[i]))
      throw Error(ErrorCode::NotInHalfLattice, "B coordinate " + std::to_string(i) + " is not integral");
  if (is_odd(doubled_[r]) != is_odd(doubled_[r + 1]))
    throw Error(ErrorCode::NotInHalfLattice, "last two coordinates are not all odd or all even");
}

HalfVector phi(const LatticeVector& v) {
  const Lattice& l = *v.lattice();
  if (l.shape().kind != Shape::Kind::TwistedPlusU)
    throw Error(ErrorCode::LatticeShapeMismatch, l.name() + " is not tagged B(2) + U");
  const std::size_t r = l.rank() - 2;
  Coords d(l.rank());
  for (std::size_t i = 0; i < r; ++i) d[i] = checked::mul(2, v[i]);
  d[r] = checked::add(v[r], v[r + 1]);
  d[r + 1] = checked::sub(v[r], v[r + 1]);
  return HalfVector(builtin::b_plus_i11_of(l.shape().even_part), std::move(d));
}

LatticeVector phi_inverse(const HalfVector& h) {
  const auto& d = h.doubled_coords();
  const std::size_t r = d.size() - 2;
  Coords c(d.size());
  for (std::size_t i = 0; i < r; ++i) c[i] = d[i] / 2;
  // b_1 = x + y and b_2 = x - y with (x, y) = (d_r, d_{r+1}) / 2.
  c[r] = checked::add(d[r], d[r + 1]) / 2;
  c[r + 1] = checked::sub(d[r], d[r + 1]) / 2;
  return LatticeVector(builtin::twisted_plus_u_of(h.base()->shape().even_part), std::move(c));
}

bool is_integral(const HalfVector& h) {
  for (Int x : h.doubled_coords())
    if (is_odd(x)) return false;
  return true;
}

LatticeVector double_vector(const HalfVector& h) {
  return LatticeVector(h.base(), h.doubled_coords());
}

Int inner_x4(const HalfVector& h1, const HalfVector& h2) {
  if (!(*h1.base() == *h2.base()))
    throw Error(ErrorCode::LatticeMismatch, h1.base()->name() + " vs " + h2.base()->name());
  return inner(*h1.base(), h1.doubled_coords(), h2.doubled_coords());
}

Int half_norm(const HalfVector& h) {
  const Int q4 = inner_x4(h, h);
  if (q4 % 4 != 0) throw Error(ErrorCode::NotInHalfLattice, "half-lattice norm is not integral");
  return q4 / 4;
}

}  // namespace lattice_orbit
