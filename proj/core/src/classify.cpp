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

#include "lattice_orbit/classify.hpp"

#include <stdexcept>

#include "lattice_orbit/builtins.hpp"

namespace lattice_orbit {

std::string_view to_string(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::OddOrbit: return "odd";
    case OrbitLabel::EvenCharacteristic: return "even_characteristic";
    case OrbitLabel::EvenOrdinary: return "even_ordinary";
  }
  return "odd";
}

OrbitLabel parse_label(std::string_view text) {
  if (text == "odd") return OrbitLabel::OddOrbit;
  if (text == "even_characteristic" || text == "characteristic") return OrbitLabel::EvenCharacteristic;
  if (text == "even_ordinary" || text == "ordinary") return OrbitLabel::EvenOrdinary;
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label '" + std::string(text) + "'");
}

namespace {

void require_twisted(const Lattice& l) {
  if (l.shape().kind != Shape::Kind::TwistedPlusU)
    throw Error(ErrorCode::LatticeShapeMismatch, l.name() + " is not tagged B(2) + U");
}

void require_primitive(const LatticeVector& v) {
  if (!is_primitive(v)) throw Error(ErrorCode::NonPrimitive, "vector is not primitive");
}

void require_lminus(const LatticeVector& v) {
  if (v.lattice()->gram() != builtin::lminus()->gram())
    throw Error(ErrorCode::LatticeShapeMismatch, v.lattice()->name() + " is not Lminus");
}

}  // namespace

ClassificationReport classify(const LatticeVector& v) {
  require_twisted(*v.lattice());
  require_primitive(v);

  ClassificationReport r{v};
  r.norm = norm(v);
  r.half_n = r.norm / 2;
  r.primitive = true;
  r.type_in_lattice = vector_type(v);
  const HalfVector h = phi(v);
  r.phi_integral = is_integral(h);
  if (r.phi_integral) {
    Coords c = h.doubled_coords();
    for (Int& x : c) x /= 2;
    r.image_type = vector_type(LatticeVector(h.base(), std::move(c)));
  } else {
    r.image_type = vector_type(double_vector(h));
  }

  const std::size_t r0 = v.rank() - 2;
  const bool b_even = !is_odd(v[r0]) && !is_odd(v[r0 + 1]);
  if (is_odd(r.half_n)) {
    if (!is_odd(v[r0]) || !is_odd(v[r0 + 1]) || r.type_in_lattice != VectorType::Ordinary)
      throw std::logic_error("odd n with b_1, b_2 not both odd");
    r.label = OrbitLabel::OddOrbit;
    return r;
  }
  const bool characteristic = r.type_in_lattice == VectorType::Characteristic;
  if (characteristic != b_even || characteristic != r.phi_integral)
    throw std::logic_error("type, b-parity and phi-integrality disagree");
  r.label = characteristic ? OrbitLabel::EvenCharacteristic : OrbitLabel::EvenOrdinary;
  return r;
}

LatticeVector representative(const LatticePtr& lattice, Int norm, OrbitLabel label) {
  require_twisted(*lattice);
  if (is_odd(norm))
    throw Error(ErrorCode::OddNormInEvenLattice, "norm " + std::to_string(norm) + " is odd");
  const Int n = norm / 2;
  if ((label == OrbitLabel::OddOrbit) != is_odd(n))
    throw Error(ErrorCode::LabelParityMismatch,
                std::string(to_string(label)) + " with n = " + std::to_string(n));

  const std::size_t r = lattice->rank() - 2;
  Coords c(lattice->rank(), 0);
  if (label != OrbitLabel::EvenCharacteristic) {
    c[r] = 1;
    c[r + 1] = n;
    return LatticeVector(lattice, std::move(c));
  }
  // (1, k) in a U(2) summand of B(2) has norm 4k.
  for (const auto& block : orthogonal_blocks(*lattice->shape().even_part)) {
    const Lattice& b = *lattice->shape().even_part;
    if (block.size() == 2 && b.gram(block[0], block[0]) == 0 && b.gram(block[1], block[1]) == 0 &&
        b.gram(block[0], block[1]) == 1) {
      c[block[0]] = 1;
      c[block[1]] = n / 2;
      return LatticeVector(lattice, std::move(c));
    }
  }
  throw Error(ErrorCode::LatticeShapeMismatch, lattice->name() + ": B has no hyperbolic plane");
}

LatticeVector representative(Int norm, OrbitLabel label) {
  return representative(builtin::lminus(), norm, label);
}

LatticeVector embed_minus(const LatticeVector& v) {
  require_lminus(v);
  Coords c(22, 0);
  for (std::size_t i = 0; i < 8; ++i) {
    c[i] = v[i];
    c[8 + i] = checked::neg(v[i]);
  }
  c[16] = v[8];
  c[17] = v[9];
  c[18] = checked::neg(v[8]);
  c[19] = checked::neg(v[9]);
  c[20] = v[10];
  c[21] = v[11];
  return LatticeVector(builtin::lambda(), std::move(c));
}

LatticeVector embed_plus(const LatticeVector& w) {
  if (w.lattice()->gram() != builtin::lplus()->gram())
    throw Error(ErrorCode::LatticeShapeMismatch, w.lattice()->name() + " is not Lplus");
  Coords c(22, 0);
  for (std::size_t i = 0; i < 8; ++i) c[i] = c[8 + i] = w[i];
  c[16] = c[18] = w[8];
  c[17] = c[19] = w[9];
  return LatticeVector(builtin::lambda(), std::move(c));
}

namespace {

void require_even_n_primitive(const LatticeVector& v) {
  require_twisted(*v.lattice());
  require_primitive(v);
  if (floor_mod(norm(v), 4) != 0)
    throw Error(ErrorCode::EvenTypeUndefinedForOddN, "norm " + std::to_string(norm(v)) + " has odd n");
}

}  // namespace

bool is_even_type(const LatticeVector& v) {
  require_even_n_primitive(v);
  return is_integral(phi(v));
}

bool sum_in_2lambda(const LatticeVector& v, const LatticeVector& w) {
  const LatticeVector a = embed_minus(v);
  const LatticeVector b = embed_plus(w);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (is_odd(checked::add(a[i], b[i]))) return false;
  return true;
}

WitnessResult even_witness(const LatticeVector& v, Int search_bound) {
  require_lminus(v);
  require_even_n_primitive(v);
  if (search_bound < 1) throw Error(ErrorCode::InvalidArgument, "search bound must be positive");
  WitnessResult result;
  if (is_odd(v[10]) || is_odd(v[11])) {
    result.parity_obstruction = true;
    return result;
  }
  const Int target = norm(v);
  const LatticePtr& plus = builtin::lplus();

  auto accept = [&](Coords c) -> bool {
    ++result.candidates_checked;
    LatticeVector w(plus, std::move(c));
    if (w.is_zero() || norm(w) != target || !is_primitive(w) || !sum_in_2lambda(v, w)) return false;
    result.witness = std::move(w);
    return true;
  };

  // v = (e, u, 0, 0) pairs with w = (e, u): the sum is (2e, 0, 2u, 0, 0).
  if (v[10] == 0 && v[11] == 0) {
    if (accept(Coords(v.coords().begin(), v.coords().begin() + 10))) {
      result.from_representative = true;
      return result;
    }
  }

  // Odometer over w_i in [-bound, bound] with w_i = v_i mod 2.
  Coords lo(10), w(10);
  for (std::size_t i = 0; i < 10; ++i) {
    lo[i] = is_odd(v[i]) == is_odd(search_bound) ? -search_bound : -search_bound + 1;
    w[i] = lo[i];
  }
  while (true) {
    if (accept(w)) return result;
    std::size_t i = 10;
    while (i > 0 && w[i - 1] + 2 > search_bound) {
      --i;
      w[i] = lo[i];
    }
    if (i == 0) return result;
    w[i - 1] += 2;
  }
}

std::vector<HeegnerReport> heegner_report(Int n_min, Int n_max) {
  if (n_min > n_max) throw Error(ErrorCode::InvalidArgument, "empty n range");
  std::vector<HeegnerReport> out;
  for (Int n = n_min; n <= n_max; ++n) {
    HeegnerReport rep{n, {}};
    const std::vector<OrbitLabel> labels =
        is_odd(n) ? std::vector{OrbitLabel::OddOrbit}
                  : std::vector{OrbitLabel::EvenCharacteristic, OrbitLabel::EvenOrdinary};
    for (OrbitLabel label : labels) {
      LatticeVector r = representative(2 * n, label);
      if (classify(r).label != label) throw std::logic_error("representative fails its own label");
      rep.components.push_back({label, std::move(r)});
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace lattice_orbit
