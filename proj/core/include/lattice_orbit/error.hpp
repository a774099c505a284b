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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice_orbit {

// Every domain failure carries one of these codes. The CLI maps them to
// exit status 2 and prints the name.
enum class ErrorCode {
  EmptyLattice,
  ZeroTwist,
  RankMismatch,
  NotSymmetric,
  ZeroVector,
  LatticeShapeMismatch,
  NotUnimodular,
  NotCharacteristic,
  NotInHalfLattice,
  NotIsometry,
  NotIntegralReflection,
  IsotropicReflectionVector,
  NotIsotropic,
  NotOrthogonal,
  OddLattice,
  LatticeMismatch,
  NoGeneratorRecipe,
  NonPrimitive,
  OddNormInEvenLattice,
  LabelParityMismatch,
  EvenTypeUndefinedForOddN,
  UnknownLattice,
  InvalidArgument,
  Overflow,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lattice_orbit
