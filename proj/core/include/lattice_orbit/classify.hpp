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

#include <optional>
#include <string_view>
#include <vector>

#include "lattice_orbit/dilatation.hpp"

namespace lattice_orbit {

/// Orbit of a primitive vector of norm 2n in B(2) + U. Odd n gives a single
/// orbit; even n splits by the type of the vector in the lattice itself.
enum class OrbitLabel { OddOrbit, EvenCharacteristic, EvenOrdinary };

std::string_view to_string(OrbitLabel label);
/// Accepts "odd", "even_characteristic", "even_ordinary" and the short
/// forms "characteristic", "ordinary". Throws InvalidArgument otherwise.
OrbitLabel parse_label(std::string_view text);

struct ClassificationReport {
  LatticeVector vector;
  Int norm = 0;
  Int half_n = 0;
  bool primitive = false;
  VectorType type_in_lattice = VectorType::Ordinary;
  bool phi_integral = false;
  /// Type in B + I_{1,1} of phi(v) when it is integral, else of 2 phi(v).
  /// Opposite in spirit to type_in_lattice for even n: the characteristic
  /// orbit maps to ordinary integral images and vice versa.
  VectorType image_type = VectorType::Ordinary;
  OrbitLabel label = OrbitLabel::OddOrbit;
};

/// Labels a primitive vector of a B(2) + U lattice. For even n the three
/// criteria (characteristic in the lattice, b_1 and b_2 both even, phi(v)
/// integral) are computed separately and must agree; a disagreement is
/// reported as std::logic_error since it would falsify the implementation.
ClassificationReport classify(const LatticeVector& v);

/// Canonical primitive vector of norm 2n in `lattice` (a B(2) + U whose B has
/// a hyperbolic plane) carrying `label`:
///   odd / even_ordinary    -> b_1 = 1, b_2 = n, all else 0
///   even_characteristic    -> the U(2) plane inside B(2) set to (1, n/2)
LatticeVector representative(const LatticePtr& lattice, Int norm, OrbitLabel label);
/// Same, in Lminus: (0^10, 1, n) or (0^8, 1, n/2, 0, 0).
LatticeVector representative(Int norm, OrbitLabel label);

/// (e, u, v) -> (e, -e, u, -u, v) from Lminus into Lambda.
LatticeVector embed_minus(const LatticeVector& v);
/// (e, u) -> (e, e, u, u, 0) from Lplus into Lambda.
LatticeVector embed_plus(const LatticeVector& w);

/// For primitive v in a B(2) + U lattice (Lminus in practice) with n even:
/// phi(v) integral.
bool is_even_type(const LatticeVector& v);

/// embed_minus(v) + embed_plus(w) lies in 2 Lambda.
bool sum_in_2lambda(const LatticeVector& v, const LatticeVector& w);

struct WitnessResult {
  std::optional<LatticeVector> witness;
  /// The U coordinates of v are not both even. The U part of embed_minus(v)
  /// passes through to Lambda untouched, so no w can repair it.
  bool parity_obstruction = false;
  /// v had zero U part, v = (e, u, 0, 0), and the witness is (e, u).
  bool from_representative = false;
  std::size_t candidates_checked = 0;
};

/// Searches Lplus for a primitive w of norm 2n with embed_minus(v) +
/// embed_plus(w) in 2 Lambda, over coordinates in [-bound, bound]. Only
/// w = (e, u) mod 2 can qualify, so those residues are the ones visited.
/// NotFound (empty witness) is a value; it proves nothing beyond the box
/// unless parity_obstruction is set.
WitnessResult even_witness(const LatticeVector& v, Int search_bound);

struct HeegnerComponent {
  OrbitLabel label;
  LatticeVector representative;
};

struct HeegnerReport {
  Int n = 0;
  std::vector<HeegnerComponent> components;
  Int norm() const { return 2 * n; }
  std::size_t component_count() const { return components.size(); }
};

/// One report per n in [n_min, n_max] for Lminus; every representative is
/// re-validated through classify.
std::vector<HeegnerReport> heegner_report(Int n_min, Int n_max);

}  // namespace lattice_orbit
