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

#include "lattice_orbit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "lattice_orbit/builtins.hpp"
#include "lattice_orbit/enumerate.hpp"
#include "lattice_orbit/parallel.hpp"

namespace lattice_orbit {

std::size_t worker_count() {
  if (const char* env = std::getenv("LATTICE_ORBIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace oracle {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BoxScan enumerate_primitive(const LatticePtr& lattice, Int bound, std::optional<Int> norm) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "negative box bound");
  BoxScan scan{lattice, bound, norm, {}};
  const std::size_t n = lattice->rank();
  if (n == 0) return scan;
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);

  std::vector<std::vector<Coords>> slices(width);
  parallel_chunks(width, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const Int first = static_cast<Int>(s) - bound;
      for_each_in_box(n - 1, bound, [&](const Coords& tail) {
        Coords c(n);
        c[0] = first;
        std::copy(tail.begin(), tail.end(), c.begin() + 1);
        Int g = std::abs(first);
        for (Int x : tail) g = std::gcd(g, x);
        if (g != 1) return;
        if (norm && inner(*lattice, c, c) != *norm) return;
        slices[s].push_back(std::move(c));
      });
    }
  });
  for (auto& slice : slices)
    for (auto& c : slice) scan.vectors.emplace_back(lattice, std::move(c));
  return scan;
}

namespace {

Coords random_primitive(std::mt19937_64& rng, std::size_t rank, Int bound) {
  while (true) {
    Coords c(rank);
    for (Int& x : c) x = static_cast<Int>(draw_below(rng, 2 * bound + 1)) - bound;
    if (gcd_of(c) == 1) return c;
  }
}

}  // namespace

InvarianceResult invariance_suite(const LatticePtr& lattice, const InvarianceOptions& options) {
  if (options.bound < 1) throw Error(ErrorCode::InvalidArgument, "box bound must be positive");
  std::vector<Isometry> extra;
  for (const IntMatrix& m : options.extra_matrices) extra.push_back(Isometry::certify(lattice, m));
  if (lattice->shape().kind != Shape::Kind::TwistedPlusU)
    throw Error(ErrorCode::LatticeShapeMismatch, lattice->name() + " is not tagged B(2) + U");

  InvarianceResult result;
  if (options.samples == 0) return result;
  const GeneratorSet generators = GeneratorSet::for_lattice(lattice);

  struct Failure {
    std::size_t index;
    LatticeVector v;
    IntMatrix g;
  };
  std::mutex mu;
  std::optional<Failure> first;
  const std::size_t total = options.samples;
  parallel_chunks(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::mt19937_64 rng(derive_seed(options.seed, i));
      const LatticeVector v(lattice, random_primitive(rng, lattice->rank(), options.bound));
      const OrbitLabel before = classify(v).label;
      auto check = [&](const Isometry& g) {
        if (classify(apply(g, v)).label == before) return true;
        std::lock_guard lock(mu);
        if (!first || i < first->index) first = Failure{i, v, g.matrix()};
        return false;
      };
      if (!check(generators.sample_word(rng(), options.word_length))) return;
      for (const Isometry& g : extra)
        if (!check(g)) return;
    }
  });

  result.checked = total;
  if (first) {
    result.pass = false;
    result.checked = first->index + 1;
    result.counterexample = first->v;
    result.counterexample_isometry = first->g;
  }
  return result;
}

ConnectivityReport connectivity_experiment(const LatticePtr& lattice, Int norm, Int bound,
                                           std::uint64_t seed, std::size_t walks,
                                           std::size_t word_length) {
  const BoxScan scan = enumerate_primitive(lattice, bound, norm);
  const GeneratorSet generators = GeneratorSet::for_lattice(lattice);
  const std::size_t n = scan.vectors.size();

  ConnectivityReport report;
  report.norm = norm;
  report.nodes = n;
  if (n == 0) return report;

  std::map<Coords, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(scan.vectors[i].coords(), i);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Edge generation is cheap at this scale; a single stream keeps it simple
  // and reproducible.
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < walks; ++k) {
    const std::size_t from = draw_below(rng, n);
    Isometry g = Isometry::identity(lattice);
    for (std::size_t j = 0; j < std::max<std::size_t>(word_length, 1); ++j) g = generators.draw(rng) * g;
    ++report.edges_attempted;
    const LatticeVector image = apply(g, scan.vectors[from]);
    auto it = index.find(image.coords());
    if (it == index.end()) continue;
    ++report.edges_in_box;
    parent[find(from)] = find(it->second);
  }

  std::vector<LatticeVector> reps;
  if (lattice->shape().kind == Shape::Kind::TwistedPlusU && !is_odd(norm)) {
    const Int half = norm / 2;
    const std::vector<OrbitLabel> labels =
        is_odd(half) ? std::vector{OrbitLabel::OddOrbit}
                     : std::vector{OrbitLabel::EvenCharacteristic, OrbitLabel::EvenOrdinary};
    for (OrbitLabel label : labels) reps.push_back(representative(lattice, norm, label));
  }

  std::map<std::size_t, ConnectivityComponent> by_root;
  for (std::size_t i = 0; i < n; ++i) {
    ConnectivityComponent& c = by_root[find(i)];
    ++c.size;
    const OrbitLabel label = classify(scan.vectors[i]).label;
    c.labels_present.insert(label);
    report.labels_overall.insert(label);
    for (const LatticeVector& r : reps)
      if (r == scan.vectors[i]) c.contains_representative = true;
  }
  for (auto& [root, c] : by_root) {
    if (c.labels_present.size() > 1) ++report.mixed_label_components;
    report.components.push_back(std::move(c));
  }
  std::stable_sort(report.components.begin(), report.components.end(),
                   [](const auto& a, const auto& b) { return a.size > b.size; });
  return report;
}

WallScanResult wall_scan(std::size_t s, std::size_t t, Int bound) {
  const LatticePtr l = make_I(s, t);
  if (!is_unimodular(*l)) throw Error(ErrorCode::NotUnimodular, l->name());
  const Signature sig = signature(*l);
  const Int diff = static_cast<Int>(sig.positive) - static_cast<Int>(sig.negative);
  WallScanResult result;
  for_each_in_box(l->rank(), bound, [&](const Coords& c) {
    if (!result.pass) return;
    const LatticeVector v(l, c);
    if (vector_type(v) != VectorType::Characteristic) return;
    ++result.characteristic_vectors;
    if (floor_mod(norm(v) - diff, 8) != 0) {
      result.pass = false;
      result.counterexample = v;
    }
  });
  return result;
}

std::size_t e8_root_count(Int norm) {
  const LatticePtr& e8 = builtin::E8();
  const auto vs = short_vectors(*e8, norm < 0 ? -norm : norm);
  return static_cast<std::size_t>(std::count_if(
      vs.begin(), vs.end(), [&](const Coords& c) { return inner(*e8, c, c) == norm; }));
}

}  // namespace oracle
}  // namespace lattice_orbit
