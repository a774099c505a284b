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
#include <vector>

#include "lattice_orbit/lattice.hpp"

namespace lattice_orbit {

/// Visits every point of [-bound, bound]^rank in lexicographic order,
/// passing a `const Coords&`.
template <class F>
void for_each_in_box(std::size_t rank, Int bound, F&& visit) {
  if (bound < 0) return;
  Coords x(rank, -bound);
  while (true) {
    visit(static_cast<const Coords&>(x));
    std::size_t i = rank;
    while (i > 0 && x[i - 1] == bound) x[--i] = -bound;
    if (i == 0) return;
    ++x[i - 1];
  }
}

bool is_definite(const Lattice& l);

/// All nonzero vectors of a definite lattice with |norm| <= max_abs_norm,
/// in lexicographic order. The search is Fincke-Pohst style with the
/// coordinate ranges decided by exact rational comparisons on an LDL^T
/// factorisation of the form, so no floating-point slack is involved.
/// Throws LatticeShapeMismatch for indefinite or degenerate lattices.
std::vector<Coords> short_vectors(const Lattice& l, Int max_abs_norm);

}  // namespace lattice_orbit
