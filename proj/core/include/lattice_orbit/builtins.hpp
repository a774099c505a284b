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

#include <string>
#include <string_view>
#include <vector>

#include "lattice_orbit/lattice.hpp"

// Named lattices. Each accessor returns the same shared instance on every
// call.
//
//   U         hyperbolic plane
//   U2        U(2)
//   E8, E8_2  E8 and E8(2)
//   I_s_t     (1)^s + (-1)^t
//   B_U       U, used as the smallest even unimodular indefinite B
//   E8_U      E8 + U, the B with Lminus = B(2) + U
//   Lminus    E8(2) + U(2) + U, coords (e[8], U(2)[2], U[2])
//   Lplus     E8(2) + U(2)
//   Lambda    E8 + E8 + U + U + U, rank 22
//   U2U       U(2) + U, rank 4
//   E8_U_I11  E8 + U + I_{1,1}, target of the dilatation on Lminus
//   U_I11     U + I_{1,1}, target of the dilatation on U2U
namespace lattice_orbit::builtin {

const LatticePtr& U();
const LatticePtr& U2();
const LatticePtr& E8();
const LatticePtr& E8_2();
const LatticePtr& B_U();
const LatticePtr& E8_U();
const LatticePtr& lminus();
const LatticePtr& lplus();
const LatticePtr& lambda();
const LatticePtr& u2u();
const LatticePtr& e8_u_i11();
const LatticePtr& u_i11();

/// Resolves any name listed above; throws UnknownLattice otherwise.
LatticePtr resolve(std::string_view name);
std::vector<std::string> names();

/// B(2) + U for a given B, reusing the named instance when B is E8_U or U.
LatticePtr twisted_plus_u_of(const LatticePtr& b);
/// B + I_{1,1} for a given B, reusing the named instance when B is E8_U or U.
LatticePtr b_plus_i11_of(const LatticePtr& b);

}  // namespace lattice_orbit::builtin
