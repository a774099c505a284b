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

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "lattice_orbit/vector.hpp"

namespace lattice_orbit {

/// An integral matrix M acting on coordinate columns with M^T G M = G and
/// det M = +-1. Only obtainable through certification, so holding one is
/// proof of membership in O(L).
class Isometry {
 public:
  /// Throws NotIsometry unless M^T G M = G and |det M| = 1.
  static Isometry certify(LatticePtr lattice, IntMatrix matrix);
  static Isometry identity(LatticePtr lattice);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  Int det() const noexcept { return det_; }

  /// (a * b)(v) = a(b(v)). Re-certifies the product.
  friend Isometry operator*(const Isometry& a, const Isometry& b);

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.matrix_ == b.matrix_ && *a.lattice_ == *b.lattice_;
  }

 private:
  Isometry(LatticePtr lattice, IntMatrix matrix, Int det)
      : lattice_(std::move(lattice)), matrix_(std::move(matrix)), det_(det) {}

  LatticePtr lattice_;
  IntMatrix matrix_;
  Int det_ = 1;
};

/// w -> w - (2<w,d>/<d,d>) d. Requires <d,d> != 0 and <d,d> | 2<e_i,d> for
/// every basis vector e_i.
Isometry reflection(const LatticeVector& delta);

/// w -> w - <x,w> e + <e,w> x - (1/2)<x,x><e,w> e, for isotropic e
/// orthogonal to x in an even lattice.
Isometry eichler(const LatticeVector& e, const LatticeVector& x);

LatticeVector apply(const Isometry& g, const LatticeVector& v);

/// Curated generators for one lattice: integral reflections in short
/// vectors, Eichler transvections along the u and v of each hyperbolic
/// plane, swaps inside each [[0,c],[c,0]] block, and -1.
///
/// Reflection vectors are drawn from norms +-1, +-2, +-4. Definite blocks of
/// rank > 2 (the E8 pieces) are searched by norm; the remaining coordinates
/// are scanned over the box [-3, 3], jointly when there are at most six of
/// them and block by block otherwise.
class GeneratorSet {
 public:
  /// Supported: lattices tagged B(2) + U, B + I_{1,1}, or I_{s,t}.
  /// Anything else throws NoGeneratorRecipe.
  static GeneratorSet for_lattice(const LatticePtr& lattice);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const std::vector<Isometry>& reflections() const noexcept { return reflections_; }
  const std::vector<Isometry>& swaps() const noexcept { return swaps_; }
  std::size_t eichler_planes() const noexcept { return planes_.size(); }

  /// One generator. Picks a family uniformly among the non-empty ones, then a
  /// member uniformly; Eichler partners x are fresh random vectors with
  /// entries in [-2, 2] supported off the chosen plane.
  Isometry draw(std::mt19937_64& rng) const;

  /// Product of `length` draws from a generator seeded with `seed`.
  Isometry sample_word(std::uint64_t seed, std::size_t length) const;

 private:
  LatticePtr lattice_;
  std::vector<Isometry> reflections_;
  std::vector<Isometry> swaps_;
  std::vector<std::size_t> planes_;  // first coordinate of each U block
};

/// GeneratorSet::for_lattice(l).sample_word(seed, length), with the
/// generator set cached per lattice.
Isometry sample_word(const LatticePtr& lattice, std::uint64_t seed, std::size_t length);

/// Uniform draw in [0, n) from the raw 64-bit stream; the distribution
/// classes of the standard library are not portable across implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace lattice_orbit
