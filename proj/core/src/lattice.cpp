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

#include "lattice_orbit/lattice.hpp"

#include <gmpxx.h>

#include <numeric>
#include <utility>

namespace lattice_orbit {

Lattice::Lattice(std::string name, IntMatrix gram, Shape shape)
    : name_(std::move(name)), gram_(std::move(gram)), shape_(std::move(shape)) {
  if (!gram_.is_square()) throw Error(ErrorCode::RankMismatch, "Gram matrix is not square");
  if (!gram_.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
}

LatticePtr make_U() {
  return std::make_shared<const Lattice>("U", IntMatrix{{0, 1}, {1, 0}});
}

LatticePtr make_E8() {
  // Bourbaki labelling, 1-based node pairs joined by an edge.
  static constexpr int kEdges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (const auto& e : kEdges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return std::make_shared<const Lattice>("E8", std::move(g));
}

LatticePtr make_I(std::size_t s, std::size_t t) {
  if (s + t == 0) throw Error(ErrorCode::EmptyLattice, "I_{0,0} has rank 0");
  IntMatrix g(s + t, s + t);
  for (std::size_t i = 0; i < s + t; ++i) g(i, i) = i < s ? 1 : -1;
  return std::make_shared<const Lattice>("I_" + std::to_string(s) + "_" + std::to_string(t),
                                         std::move(g), Shape{Shape::Kind::OddDiagonal, nullptr});
}

LatticePtr twist(const Lattice& l, Int n) {
  if (n == 0) throw Error(ErrorCode::ZeroTwist, "twist by 0 is degenerate");
  if (n == 1) return std::make_shared<const Lattice>(l);
  return std::make_shared<const Lattice>(l.name() + "(" + std::to_string(n) + ")",
                                         scaled(l.gram(), n));
}

LatticePtr direct_sum(const Lattice& a, const Lattice& b, std::string name) {
  return std::make_shared<const Lattice>(std::move(name), block_diagonal(a.gram(), b.gram()));
}

LatticePtr direct_sum(const Lattice& a, const Lattice& b) {
  return direct_sum(a, b, a.name() + "+" + b.name());
}

namespace {

void require_even_unimodular(const Lattice& b) {
  if (!is_even(b)) throw Error(ErrorCode::OddLattice, b.name() + " is not even");
  if (!is_unimodular(b)) throw Error(ErrorCode::NotUnimodular, b.name() + " is not unimodular");
}

}  // namespace

LatticePtr make_twisted_plus_u(LatticePtr b, std::string name) {
  require_even_unimodular(*b);
  auto g = block_diagonal(scaled(b->gram(), 2), make_U()->gram());
  return std::make_shared<const Lattice>(std::move(name), std::move(g),
                                         Shape{Shape::Kind::TwistedPlusU, std::move(b)});
}

LatticePtr make_b_plus_i11(LatticePtr b, std::string name) {
  require_even_unimodular(*b);
  auto g = block_diagonal(b->gram(), make_I(1, 1)->gram());
  return std::make_shared<const Lattice>(std::move(name), std::move(g),
                                         Shape{Shape::Kind::BPlusI11, std::move(b)});
}

Int inner(const Lattice& l, std::span<const Int> v, std::span<const Int> w) {
  const std::size_t n = l.rank();
  if (v.size() != n || w.size() != n)
    throw Error(ErrorCode::RankMismatch, "tuple length differs from rank of " + l.name());
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Int g = l.gram(i, j);
      if (g != 0 && w[j] != 0) row = checked::fma(g, w[j], row);
    }
    acc = checked::fma(v[i], row, acc);
  }
  return acc;
}

Signature signature(const Lattice& l) {
  const std::size_t n = l.rank();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(l.gram(i, j));

  // Congruence diagonalisation on the trailing block a[k..n). When no
  // diagonal pivot exists but a[i][j] != 0, replace e_i by e_i + e_j, which
  // puts 2 a[i][j] on the diagonal.
  Signature sig;
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  while (!live.empty()) {
    std::size_t pivot = live.size();
    for (std::size_t p = 0; p < live.size(); ++p)
      if (a[live[p]][live[p]] != 0) {
        pivot = p;
        break;
      }
    if (pivot == live.size()) {
      bool found = false;
      for (std::size_t p = 0; p < live.size() && !found; ++p)
        for (std::size_t q = p + 1; q < live.size() && !found; ++q) {
          const std::size_t i = live[p], j = live[q];
          if (a[i][j] == 0) continue;
          for (std::size_t k : live) a[i][k] += a[j][k];
          for (std::size_t k : live) a[k][i] += a[k][j];
          pivot = p;
          found = true;
        }
      if (!found) {
        sig.zero += live.size();
        break;
      }
    }
    const std::size_t pi = live[pivot];
    const mpq_class d = a[pi][pi];
    (d > 0 ? sig.positive : sig.negative) += 1;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (std::size_t i : live) {
      if (a[i][pi] == 0) continue;
      const mpq_class f = a[i][pi] / d;
      for (std::size_t j : live) a[i][j] -= f * a[pi][j];
    }
  }
  return sig;
}

bool is_even(const Lattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (is_odd(l.gram(i, i))) return false;
  return true;
}

bool is_unimodular(const Lattice& l) {
  const Int d = determinant(l.gram());
  return d == 1 || d == -1;
}

std::vector<std::vector<std::size_t>> orthogonal_blocks(const Lattice& l) {
  const std::size_t n = l.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.gram(i, j) != 0) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

}  // namespace lattice_orbit
