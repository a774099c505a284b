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

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lattice_orbit/matrix.hpp"

namespace lattice_orbit {

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// Structural tag attached by the constructors that need one. Coordinate maps
/// such as the dilatation are basis dependent, so the shape is never inferred
/// from the Gram matrix alone.
struct Shape {
  enum class Kind {
    Generic,
    /// B(2) + U with B even unimodular; coords (a_1..a_r, b_1, b_2).
    TwistedPlusU,
    /// B + I_{1,1} with B even unimodular; coords (a_1..a_r, m, n).
    BPlusI11,
    /// I_{s,t}, diagonal +1 then -1.
    OddDiagonal,
  };
  Kind kind = Kind::Generic;
  /// The even unimodular B for TwistedPlusU and BPlusI11.
  LatticePtr even_part;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// An integral lattice in a fixed basis: a name and a symmetric Gram matrix.
/// Values are immutable; share them through LatticePtr.
class Lattice {
 public:
  Lattice(std::string name, IntMatrix gram, Shape shape = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  Int gram(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const Shape& shape() const noexcept { return shape_; }

  /// Same name and Gram matrix; the shape tag is not compared.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.name_ == b.name_ && a.gram_ == b.gram_;
  }

 private:
  std::string name_;
  IntMatrix gram_;
  Shape shape_;
};

// Constructors. Component order in direct sums is left to right and the
// coordinates of the second summand start at rank(first).
LatticePtr make_U();
/// Negated Cartan matrix of E8, Bourbaki node order: the chain
/// 1-3-4-5-6-7-8 with node 2 attached to node 4.
LatticePtr make_E8();
LatticePtr make_I(std::size_t s, std::size_t t);
LatticePtr twist(const Lattice& l, Int n);
LatticePtr direct_sum(const Lattice& a, const Lattice& b);
LatticePtr direct_sum(const Lattice& a, const Lattice& b, std::string name);

/// B(2) + U, tagged for the dilatation. B must be even and unimodular.
LatticePtr make_twisted_plus_u(LatticePtr b, std::string name);
/// B + I_{1,1}, tagged. B must be even and unimodular.
LatticePtr make_b_plus_i11(LatticePtr b, std::string name);

Int inner(const Lattice& l, std::span<const Int> v, std::span<const Int> w);
Signature signature(const Lattice& l);
bool is_even(const Lattice& l);
bool is_unimodular(const Lattice& l);

/// Maximal blocks of the Gram matrix under the "nonzero off-diagonal entry"
/// relation, each as a sorted list of coordinate indices.
std::vector<std::vector<std::size_t>> orthogonal_blocks(const Lattice& l);

}  // namespace lattice_orbit
