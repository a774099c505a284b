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

#include "lattice_orbit/error.hpp"

namespace lattice_orbit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyLattice: return "EmptyLattice";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::LatticeShapeMismatch: return "LatticeShapeMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::NotInHalfLattice: return "NotInHalfLattice";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotIntegralReflection: return "NotIntegralReflection";
    case ErrorCode::IsotropicReflectionVector: return "IsotropicReflectionVector";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::OddLattice: return "OddLattice";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::NoGeneratorRecipe: return "NoGeneratorRecipe";
    case ErrorCode::NonPrimitive: return "NonPrimitive";
    case ErrorCode::OddNormInEvenLattice: return "OddNormInEvenLattice";
    case ErrorCode::LabelParityMismatch: return "LabelParityMismatch";
    case ErrorCode::EvenTypeUndefinedForOddN: return "EvenTypeUndefinedForOddN";
    case ErrorCode::UnknownLattice: return "UnknownLattice";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace lattice_orbit
