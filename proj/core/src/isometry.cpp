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

#include "lattice_orbit/isometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "lattice_orbit/enumerate.hpp"

namespace lattice_orbit {

namespace {

bool preserves_form(const IntMatrix& g, const IntMatrix& m) {
  return m.transpose() * g * m == g;
}

}  // namespace

Isometry Isometry::certify(LatticePtr lattice, IntMatrix matrix) {
  const std::size_t n = lattice->rank();
  if (matrix.rows() != n || matrix.cols() != n)
    throw Error(ErrorCode::NotIsometry, "matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  if (!preserves_form(lattice->gram(), matrix))
    throw Error(ErrorCode::NotIsometry, "M^T G M != G on " + lattice->name());
  const Int d = determinant(matrix);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotIsometry, "det M = " + std::to_string(d));
  return Isometry(std::move(lattice), std::move(matrix), d);
}

Isometry Isometry::identity(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return Isometry(std::move(lattice), IntMatrix::identity(n), 1);
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  if (!(*a.lattice_ == *b.lattice_))
    throw Error(ErrorCode::LatticeMismatch, a.lattice_->name() + " vs " + b.lattice_->name());
  IntMatrix m = a.matrix_ * b.matrix_;
  if (!preserves_form(a.lattice_->gram(), m))
    throw Error(ErrorCode::NotIsometry, "product failed certification");
  return Isometry(a.lattice_, std::move(m), a.det_ * b.det_);
}

Isometry reflection(const LatticeVector& delta) {
  const LatticePtr& l = delta.lattice();
  const Int nd = norm(delta);
  if (nd == 0) throw Error(ErrorCode::IsotropicReflectionVector, "reflection in an isotropic vector");
  const std::size_t n = l->rank();
  const Coords gd = l->gram() * std::span<const Int>(delta.coords());
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int twice = checked::mul(2, gd[i]);
    if (twice % nd != 0)
      throw Error(ErrorCode::NotIntegralReflection,
                  "<d,d> = " + std::to_string(nd) + " does not divide 2<e_" + std::to_string(i) + ",d>");
    const Int k = twice / nd;
    for (std::size_t j = 0; j < n; ++j) m(j, i) = checked::sub(m(j, i), checked::mul(k, delta[j]));
  }
  return Isometry::certify(l, std::move(m));
}

Isometry eichler(const LatticeVector& e, const LatticeVector& x) {
  const LatticePtr& l = e.lattice();
  if (!is_even(*l)) throw Error(ErrorCode::OddLattice, l->name());
  if (norm(e) != 0) throw Error(ErrorCode::NotIsotropic, "<e,e> != 0");
  if (inner(e, x) != 0) throw Error(ErrorCode::NotOrthogonal, "<e,x> != 0");
  const std::size_t n = l->rank();
  const Coords ge = l->gram() * std::span<const Int>(e.coords());
  const Coords gx = l->gram() * std::span<const Int>(x.coords());
  const Int half_xx = norm(x) / 2;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    // t(e_i) = e_i - <x,e_i> e + <e,e_i> x - (1/2)<x,x><e,e_i> e
    const Int ce = checked::neg(checked::add(gx[i], checked::mul(half_xx, ge[i])));
    for (std::size_t j = 0; j < n; ++j) {
      Int v = m(j, i);
      v = checked::fma(ce, e[j], v);
      v = checked::fma(ge[i], x[j], v);
      m(j, i) = v;
    }
  }
  return Isometry::certify(l, std::move(m));
}

LatticeVector apply(const Isometry& g, const LatticeVector& v) {
  if (!(*g.lattice() == *v.lattice()))
    throw Error(ErrorCode::LatticeMismatch, g.lattice()->name() + " vs " + v.lattice()->name());
  return LatticeVector(v.lattice(), g.matrix() * std::span<const Int>(v.coords()));
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "draw from an empty range");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

namespace {

bool is_hyperbolic_block(const Lattice& l, const std::vector<std::size_t>& b, Int scale) {
  return b.size() == 2 && l.gram(b[0], b[0]) == 0 && l.gram(b[1], b[1]) == 0 &&
         l.gram(b[0], b[1]) == scale;
}

// Representative of {d, -d}: first nonzero coordinate positive.
bool canonical_sign(const Coords& d) {
  for (Int x : d)
    if (x != 0) return x > 0;
  return false;
}

void collect_reflection(const LatticePtr& l, const Coords& d, std::set<Coords>& seen,
                        std::vector<Isometry>& out) {
  if (!canonical_sign(d) || seen.count(d)) return;
  const Int nd = inner(*l, d, d);
  const Int a = nd < 0 ? -nd : nd;
  if (a != 1 && a != 2 && a != 4) return;
  try {
    out.push_back(reflection(LatticeVector(l, d)));
    seen.insert(d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotIntegralReflection) throw;
  }
}

}  // namespace

GeneratorSet GeneratorSet::for_lattice(const LatticePtr& lattice) {
  using K = Shape::Kind;
  const K kind = lattice->shape().kind;
  if (kind != K::TwistedPlusU && kind != K::BPlusI11 && kind != K::OddDiagonal)
    throw Error(ErrorCode::NoGeneratorRecipe, lattice->name());

  GeneratorSet set;
  set.lattice_ = lattice;
  const std::size_t n = lattice->rank();
  const auto blocks = orthogonal_blocks(*lattice);

  std::vector<std::size_t> rest;
  std::vector<std::vector<std::size_t>> rest_blocks;
  std::set<Coords> seen;
  for (const auto& b : blocks) {
    if (b.size() > 2) {
      IntMatrix g(b.size(), b.size());
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = lattice->gram(b[i], b[j]);
      const Lattice sub("block", std::move(g));
      if (is_definite(sub)) {
        for (const Coords& s : short_vectors(sub, 4)) {
          Coords d(n, 0);
          for (std::size_t i = 0; i < b.size(); ++i) d[b[i]] = s[i];
          collect_reflection(lattice, d, seen, set.reflections_);
        }
        continue;
      }
    }
    rest.insert(rest.end(), b.begin(), b.end());
    rest_blocks.push_back(b);
  }
  std::sort(rest.begin(), rest.end());
  auto scan = [&](const std::vector<std::size_t>& coords) {
    for_each_in_box(coords.size(), 3, [&](const Coords& s) {
      Coords d(n, 0);
      for (std::size_t i = 0; i < coords.size(); ++i) d[coords[i]] = s[i];
      collect_reflection(lattice, d, seen, set.reflections_);
    });
  };
  if (rest.size() <= 6) {
    scan(rest);
  } else {
    for (const auto& b : rest_blocks) scan(b);
  }

  for (const auto& b : blocks) {
    if (b.size() != 2 || lattice->gram(b[0], b[0]) != 0 || lattice->gram(b[1], b[1]) != 0 ||
        lattice->gram(b[0], b[1]) == 0)
      continue;
    IntMatrix m = IntMatrix::identity(n);
    m(b[0], b[0]) = m(b[1], b[1]) = 0;
    m(b[0], b[1]) = m(b[1], b[0]) = 1;
    set.swaps_.push_back(Isometry::certify(lattice, std::move(m)));
    if (is_even(*lattice) && is_hyperbolic_block(*lattice, b, 1)) set.planes_.push_back(b[0]);
  }
  return set;
}

Isometry GeneratorSet::draw(std::mt19937_64& rng) const {
  enum Family { Reflection, Eichler, Swap, Negation };
  std::vector<Family> families;
  if (!reflections_.empty()) families.push_back(Reflection);
  if (!planes_.empty()) families.push_back(Eichler);
  if (!swaps_.empty()) families.push_back(Swap);
  families.push_back(Negation);

  const std::size_t n = lattice_->rank();
  switch (families[draw_below(rng, families.size())]) {
    case Reflection:
      return reflections_[draw_below(rng, reflections_.size())];
    case Swap:
      return swaps_[draw_below(rng, swaps_.size())];
    case Eichler: {
      const std::size_t p = planes_[draw_below(rng, planes_.size())];
      Coords e(n, 0);
      e[p + draw_below(rng, 2)] = 1;
      Coords x(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (i != p && i != p + 1) x[i] = static_cast<Int>(draw_below(rng, 5)) - 2;
      return eichler(LatticeVector(lattice_, std::move(e)), LatticeVector(lattice_, std::move(x)));
    }
    case Negation:
      break;
  }
  return Isometry::certify(lattice_, scaled(IntMatrix::identity(n), -1));
}

Isometry GeneratorSet::sample_word(std::uint64_t seed, std::size_t length) const {
  std::mt19937_64 rng(seed);
  Isometry g = Isometry::identity(lattice_);
  for (std::size_t i = 0; i < length; ++i) g = draw(rng) * g;
  return g;
}

Isometry sample_word(const LatticePtr& lattice, std::uint64_t seed, std::size_t length) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::vector<std::vector<Int>>>,
                  std::shared_ptr<const GeneratorSet>>
      cache;
  std::shared_ptr<const GeneratorSet> set;
  {
    std::lock_guard lock(mu);
    auto key = std::make_pair(lattice->name(), lattice->gram().to_rows());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(std::move(key),
                         std::make_shared<const GeneratorSet>(GeneratorSet::for_lattice(lattice)))
               .first;
    set = it->second;
  }
  return set->sample_word(seed, length);
}

}  // namespace lattice_orbit
