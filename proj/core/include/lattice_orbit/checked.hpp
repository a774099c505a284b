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
#include <numeric>
#include <span>
#include <vector>

#include "lattice_orbit/error.hpp"

namespace lattice_orbit {

using Int = std::int64_t;
using Coords = std::vector<Int>;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a*b + c
inline Int fma(Int a, Int b, Int c) { return add(mul(a, b), c); }

}  // namespace checked

inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_odd(Int a) { return (a & 1) != 0; }

inline Int gcd_of(std::span<const Int> xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

}  // namespace lattice_orbit
