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

#include <nlohmann/json.hpp>

#include "lattice_orbit/classify.hpp"
#include "lattice_orbit/isometry.hpp"
#include "lattice_orbit/oracle.hpp"

// JSON documents for every public value. Key order is fixed and matches the
// schemas under docs/schemas.
namespace lattice_orbit::json {

using Json = nlohmann::ordered_json;

Json to_json(const Lattice& l);
Json to_json(const LatticeVector& v);
Json to_json(const HalfVector& h);
Json to_json(const Isometry& g);
Json to_json(const ClassificationReport& r);
Json to_json(const HeegnerReport& r);
Json to_json(const WitnessResult& r);
Json to_json(const oracle::BoxScan& s);
Json to_json(const oracle::ConnectivityReport& r);

/// {"suite", "status", "counterexample", "stats"} envelope for oracle runs.
Json suite_result(std::string_view suite, bool pass, const Json& counterexample, Json stats);

/// A lattice given either as a built-in name or inline
/// {"name", "rank", "gram"}. Inline lattices carry no shape tag.
LatticePtr lattice_from_json(const Json& j);
LatticeVector vector_from_json(const Json& j);
HalfVector half_vector_from_json(const Json& j);
Isometry isometry_from_json(const Json& j);

}  // namespace lattice_orbit::json
