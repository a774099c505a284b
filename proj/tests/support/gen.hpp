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

// Seeded generators for property tests.

#pragma once

#include <cstdint>
#include <random>

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lattice_orbit/builtins.hpp"
#include "lattice_orbit/classify.hpp"
#include "lattice_orbit/isometry.hpp"

namespace lattice_orbit::testing {

// Runs f and returns the code of the Error it throws.
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

// Every named built-in plus a few odd diagonal lattices.
inline std::vector<LatticePtr> all_builtins() {
  std::vector<LatticePtr> out;
  for (const auto& name : builtin::names())
    if (name != "I_s_t") out.push_back(builtin::resolve(name));
  for (const char* name : {"I_1_1", "I_2_2", "I_3_1"}) out.push_back(builtin::resolve(name));
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  Int uniform(Int lo, Int hi) {
    return lo + static_cast<Int>(draw_below(rng_, static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Coords coords(std::size_t rank, Int bound) {
    Coords c(rank);
    for (Int& x : c) x = uniform(-bound, bound);
    return c;
  }

  LatticeVector vector(const LatticePtr& l, Int bound) { return LatticeVector(l, coords(l->rank(), bound)); }

  LatticeVector nonzero(const LatticePtr& l, Int bound) {
    while (true) {
      LatticeVector v = vector(l, bound);
      if (!v.is_zero()) return v;
    }
  }

  LatticeVector primitive(const LatticePtr& l, Int bound) {
    while (true) {
      LatticeVector v = vector(l, bound);
      if (!v.is_zero() && is_primitive(v)) return v;
    }
  }

  // Primitive with norm divisible by 4, i.e. n even.
  LatticeVector primitive_even_n(const LatticePtr& l, Int bound) {
    while (true) {
      LatticeVector v = primitive(l, bound);
      if (floor_mod(norm(v), 4) == 0) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lattice_orbit::testing
