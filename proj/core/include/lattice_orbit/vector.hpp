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

#include <string_view>

#include "lattice_orbit/lattice.hpp"

namespace lattice_orbit {

/// Integer coordinates with respect to the constructor basis of `lattice`.
class LatticeVector {
 public:
  LatticeVector(LatticePtr lattice, Coords coords);
  /// The zero vector.
  explicit LatticeVector(LatticePtr lattice);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const Coords& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  std::size_t rank() const noexcept { return coords_.size(); }
  bool is_zero() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_ && *a.lattice_ == *b.lattice_;
  }

 private:
  LatticePtr lattice_;
  Coords coords_;
};

enum class VectorType { Characteristic, Ordinary };

std::string_view to_string(VectorType t);

Int norm(const LatticeVector& v);
Int inner(const LatticeVector& v, const LatticeVector& w);

/// gcd of coordinates equals 1. Throws ZeroVector on 0.
bool is_primitive(const LatticeVector& v);

/// Characteristic iff <v, e_i> = <e_i, e_i> mod 2 for every basis vector.
/// Both sides are Z/2-linear in the test vector after reduction mod 2, so the
/// basis check settles the statement for all of L.
VectorType vector_type(const LatticeVector& v);

/// Single instance of the defining congruence: <v, eta> = <eta, eta> mod 2.
bool characteristic_against(const LatticeVector& v, std::span<const Int> eta);

/// Fast type test on B + I_{1,1}: characteristic iff the last two coordinates
/// are odd and every B coordinate is even. The lattice must be a direct sum
/// whose trailing 2x2 block is diag(1, -1), with an even unimodular leading
/// block and no coupling between them.
VectorType char_fastpath_bi11(const LatticeVector& v);

/// For a characteristic vector of a unimodular lattice of signature (s, t):
/// norm(v) = s - t mod 8.
bool wall_congruence_holds(const LatticeVector& v);

}  // namespace lattice_orbit
