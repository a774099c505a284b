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
#include <optional>
#include <set>
#include <vector>

#include "lattice_orbit/classify.hpp"
#include "lattice_orbit/isometry.hpp"

// Brute-force checks at desk scale. Nothing here proves transitivity; the
// suites look for violations of invariance and report what they saw.
namespace lattice_orbit::oracle {

struct BoxScan {
  LatticePtr lattice;
  Int bound = 0;
  std::optional<Int> norm_filter;
  std::vector<LatticeVector> vectors;
};

/// Primitive vectors in [-bound, bound]^rank (optionally of one norm), in
/// lexicographic order. Work is split on the first coordinate.
BoxScan enumerate_primitive(const LatticePtr& lattice, Int bound, std::optional<Int> norm);

struct InvarianceOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  Int bound = 3;
  std::size_t word_length = 8;
  /// Additional matrices to test alongside the sampled words. Each must
  /// certify, otherwise the suite refuses to run (NotIsometry).
  std::vector<IntMatrix> extra_matrices;
};

struct InvarianceResult {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<LatticeVector> counterexample;
  std::optional<IntMatrix> counterexample_isometry;
};

/// classify(g v).label == classify(v).label for random primitive v in the box
/// and sampled words g. Sample i uses its own stream seeded from (seed, i),
/// so the outcome is independent of the worker count.
InvarianceResult invariance_suite(const LatticePtr& lattice, const InvarianceOptions& options);

struct ConnectivityComponent {
  std::size_t size = 0;
  std::set<OrbitLabel> labels_present;
  bool contains_representative = false;
};

struct ConnectivityReport {
  Int norm = 0;
  std::size_t nodes = 0;
  std::size_t edges_attempted = 0;
  std::size_t edges_in_box = 0;
  std::vector<ConnectivityComponent> components;  // largest first
  std::size_t mixed_label_components = 0;
  std::set<OrbitLabel> labels_overall;
};

/// Union-find over the primitive box scan of one norm, joining v and g v
/// whenever a sampled word g keeps v inside the box.
ConnectivityReport connectivity_experiment(const LatticePtr& lattice, Int norm, Int bound,
                                           std::uint64_t seed, std::size_t walks,
                                           std::size_t word_length);

struct WallScanResult {
  bool pass = true;
  std::size_t characteristic_vectors = 0;
  std::optional<LatticeVector> counterexample;
};

/// Every characteristic vector in the box of I_{s,t} has norm = s - t mod 8.
WallScanResult wall_scan(std::size_t s, std::size_t t, Int bound);

/// Number of vectors of the given norm in E8 (default: roots).
std::size_t e8_root_count(Int norm = -2);

/// splitmix64 finaliser over (seed, index); used to derive per-sample seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace lattice_orbit::oracle
