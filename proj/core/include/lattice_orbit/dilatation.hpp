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

#include "lattice_orbit/vector.hpp"

namespace lattice_orbit {

/// An element of B + (1/2) I_{1,1}, stored as twice its coordinates so that
/// everything stays integral. The first r stored values are even; the last
/// two share a parity (both odd exactly when the element is fractional).
class HalfVector {
 public:
  /// Throws NotInHalfLattice when the parity invariants fail, and
  /// LatticeShapeMismatch when `base` is not tagged B + I_{1,1}.
  HalfVector(LatticePtr base, Coords doubled_coords);

  const LatticePtr& base() const noexcept { return base_; }
  const Coords& doubled_coords() const noexcept { return doubled_; }

  friend bool operator==(const HalfVector& a, const HalfVector& b) {
    return a.doubled_ == b.doubled_ && *a.base_ == *b.base_;
  }

 private:
  LatticePtr base_;
  Coords doubled_;
};

/// (a, b_1, b_2) -> (a, (b_1 + b_2)/2, (b_1 - b_2)/2) from B(2) + U into
/// B + (1/2) I_{1,1}. Halves the form: <v, w> = 2 <phi v, phi w>.
HalfVector phi(const LatticeVector& v);
LatticeVector phi_inverse(const HalfVector& h);

/// All stored coordinates even, i.e. the true coordinates are integers.
bool is_integral(const HalfVector& h);

/// The vector 2h of B + I_{1,1}.
LatticeVector double_vector(const HalfVector& h);

/// 4 <h1, h2>, computed from the stored coordinates.
Int inner_x4(const HalfVector& h1, const HalfVector& h2);

/// <h, h>. Integral on every element of B + (1/2) I_{1,1}: the B part
/// contributes a^T B a and the I_{1,1} part (x^2 - y^2)/4 with x = y mod 2.
Int half_norm(const HalfVector& h);

}  // namespace lattice_orbit
