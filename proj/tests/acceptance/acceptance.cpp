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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gen.hpp"
#include "lattice_orbit/enumerate.hpp"
#include "lattice_orbit/oracle.hpp"

namespace lattice_orbit {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kRandomSamples = 10000;

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no time limit
  std::function<Verdict()> body;
};

// Primitive vectors of U(2)+U in box 6 by norm; shared by criteria 1, 3 and 7.
const std::map<Int, std::vector<LatticeVector>>& rank_four_box() {
  static const auto scan = [] {
    std::map<Int, std::vector<LatticeVector>> by_norm;
    for (auto& v : oracle::enumerate_primitive(builtin::u2u(), 6, std::nullopt).vectors)
      by_norm[norm(v)].push_back(std::move(v));
    return by_norm;
  }();
  return scan;
}

std::vector<LatticeVector> random_lminus_even_n() {
  testing::Gen g(kSeed);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < kRandomSamples; ++i) out.push_back(g.primitive_even_n(builtin::lminus(), 6));
  return out;
}

Verdict orbit_counts() {
  std::ostringstream d;
  bool pass = true;
  for (Int n = -6; n <= 6; ++n) {
    const auto it = rank_four_box().find(2 * n);
    if (it == rank_four_box().end()) continue;
    std::set<OrbitLabel> labels;
    for (const auto& v : it->second) labels.insert(classify(v).label);
    const std::size_t want = is_odd(n) ? 1 : 2;
    pass = pass && labels.size() == want;
    d << n << ":" << labels.size() << " ";
  }
  return {pass, "n:labels " + d.str()};
}

Verdict label_invariance() {
  oracle::InvarianceOptions opts;
  opts.samples = kRandomSamples;
  opts.seed = kSeed;
  opts.bound = 3;
  opts.word_length = 8;
  const auto r = oracle::invariance_suite(builtin::lminus(), opts);
  return {r.pass && r.checked == kRandomSamples,
          std::to_string(r.checked) + " pairs, seed 42, word length 8, " +
              (r.counterexample ? "counterexample found" : "no label change")};
}

// The three criteria computed independently of classify.
bool triple_agrees(const LatticeVector& v) {
  const std::size_t r = v.rank() - 2;
  const bool characteristic = vector_type(v) == VectorType::Characteristic;
  const bool b_even = !is_odd(v[r]) && !is_odd(v[r + 1]);
  const bool integral = is_integral(phi(v));
  return characteristic == b_even && b_even == integral;
}

Verdict triple_agreement() {
  std::size_t checked = 0, bad = 0;
  for (const auto& [nrm, vs] : rank_four_box()) {
    if (floor_mod(nrm, 4) != 0) continue;
    for (const auto& v : vs) {
      ++checked;
      bad += !triple_agrees(v);
    }
  }
  const std::size_t box = checked;
  for (const auto& v : random_lminus_even_n()) {
    ++checked;
    bad += !triple_agrees(v);
  }
  return {bad == 0, std::to_string(box) + " box + " + std::to_string(checked - box) + " random, " +
                        std::to_string(bad) + " disagreements"};
}

Verdict fast_path() {
  std::size_t checked = 0, bad = 0;
  for_each_in_box(4, 4, [&](const Coords& c) {
    const LatticeVector v(builtin::u_i11(), c);
    ++checked;
    bad += char_fastpath_bi11(v) != vector_type(v);
  });
  return {bad == 0 && checked == 6561,
          std::to_string(checked) + " vectors, " + std::to_string(bad) + " disagreements"};
}

bool phi_contracts(const LatticeVector& v) {
  const HalfVector h = phi(v);
  return norm(v) == 2 * half_norm(h) && phi(phi_inverse(h)) == h && phi_inverse(h) == v;
}

Verdict dilatation() {
  testing::Gen g(kSeed);
  std::size_t checked = 0, bad = 0;
  for (std::size_t i = 0; i < kRandomSamples; ++i) {
    ++checked;
    bad += !phi_contracts(g.vector(builtin::lminus(), 6));
  }
  for_each_in_box(4, 5, [&](const Coords& c) {
    ++checked;
    bad += !phi_contracts(LatticeVector(builtin::u2u(), c));
  });
  return {bad == 0, std::to_string(checked) + " vectors, " + std::to_string(bad) + " failures"};
}

Verdict wall() {
  bool pass = true;
  std::size_t total = 0;
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t t = 1; t <= 3; ++t) {
      const auto r = oracle::wall_scan(s, t, 3);
      pass = pass && r.pass && r.characteristic_vectors > 0;
      total += r.characteristic_vectors;
    }
  return {pass, "9 lattices, " + std::to_string(total) + " characteristic vectors"};
}

Verdict even_type() {
  const auto& L = builtin::lminus();
  bool pass = true;
  for (Int k = -5; k <= 5; ++k) {
    Coords a(12, 0), b(12, 0);
    a[8] = k;
    a[9] = 1;
    b[10] = 2 * k;
    b[11] = 1;
    const LatticeVector va(L, a), vb(L, b);
    const auto found = even_witness(va, 2);
    pass = pass && found.witness && is_primitive(*found.witness) && norm(*found.witness) == norm(va) &&
           sum_in_2lambda(va, *found.witness);
    const auto none = even_witness(vb, 2);
    pass = pass && !none.witness && none.parity_obstruction;
  }
  std::size_t checked = 0, bad = 0;
  auto agree = [&](const LatticeVector& v) {
    ++checked;
    bad += is_even_type(v) != (classify(v).label == OrbitLabel::EvenCharacteristic);
  };
  for (const auto& [nrm, vs] : rank_four_box())
    if (floor_mod(nrm, 4) == 0)
      for (const auto& v : vs) agree(v);
  for (const auto& v : random_lminus_even_n()) agree(v);
  return {pass && bad == 0, "22 witness checks " + std::string(pass ? "ok" : "FAILED") + ", " +
                                std::to_string(checked) + " even-type checks, " + std::to_string(bad) +
                                " disagreements"};
}

Verdict connectivity() {
  bool pass = true;
  std::size_t nodes = 0, comps = 0, mixed = 0;
  for (Int n = -8; n <= 8; n += 2) {
    const auto r = oracle::connectivity_experiment(builtin::u2u(), n, 5, 7, 10000, 1);
    nodes += r.nodes;
    comps += r.components.size();
    mixed += r.mixed_label_components;
    pass = pass && r.mixed_label_components == 0;
  }
  return {pass, std::to_string(nodes) + " nodes, " + std::to_string(comps) + " components, " +
                    std::to_string(mixed) + " mixed"};
}

Verdict anchors() {
  const auto e8 = make_E8();
  const bool e8_ok = std::abs(determinant(e8->gram())) == 1 && signature(*e8) == Signature{0, 8, 0} &&
                     oracle::e8_root_count() == 240;
  const bool lm_ok = signature(*builtin::lminus()) == Signature{2, 10, 0};
  testing::Gen g(kSeed);
  bool embed_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const LatticeVector v = g.vector(builtin::lminus(), 5), v2 = g.vector(builtin::lminus(), 5);
    const LatticeVector w = g.vector(builtin::lplus(), 5), w2 = g.vector(builtin::lplus(), 5);
    embed_ok = embed_ok && inner(embed_minus(v), embed_plus(w)) == 0 &&
               inner(embed_minus(v), embed_minus(v2)) == inner(v, v2) &&
               inner(embed_plus(w), embed_plus(w2)) == inner(w, w2);
  }
  return {e8_ok && lm_ok && embed_ok, std::string("E8 ") + (e8_ok ? "ok" : "BAD") + ", Lminus signature " +
                                          (lm_ok ? "ok" : "BAD") + ", embeddings " + (embed_ok ? "ok" : "BAD")};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  ::pclose(pipe);
  return out;
}

Verdict cli_golden() {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"classify_odd.json", "classify --lattice Lminus --coords 0,0,0,0,0,0,0,0,0,0,1,5"},
      {"heegner_range.json", "heegner --from -2 --to 2"},
      {"rep_characteristic.json", "rep --norm 8 --class characteristic"},
      {"heegner_norm_minus2.json", "heegner --norm-from -2 --norm-to -2"},
  };
  std::size_t matched = 0;
  std::string failures;
  for (const auto& [file, args] : cases) {
    std::ifstream in(std::filesystem::path(LATTICE_ORBIT_GOLDEN_DIR) / file, std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    const std::string cmd = std::string("\"") + LATTICE_ORBIT_CLI_PATH + "\" " + args;
    const std::string first = capture(cmd), second = capture(cmd);
    if (in && first == golden.str() && second == first)
      ++matched;
    else
      failures += " " + file;
  }
  return {matched == cases.size(),
          std::to_string(matched) + "/" + std::to_string(cases.size()) + " byte-identical" + failures};
}

}  // namespace
}  // namespace lattice_orbit

int main() {
  using namespace lattice_orbit;
  const std::vector<Criterion> criteria{
      {1, "orbit count per norm in U(2)+U box 6", 120, orbit_counts},
      {2, "label invariance under isometry words", 120, label_invariance},
      {3, "triple-criterion agreement", 0, triple_agreement},
      {4, "fast characteristic test on U+I_{1,1} box 4", 60, fast_path},
      {5, "dilatation norm relation and inverse", 0, dilatation},
      {6, "characteristic norms mod 8 in I_{s,t}", 0, wall},
      {7, "even type, witnesses and parity obstruction", 0, even_type},
      {8, "connectivity purity in U(2)+U", 300, connectivity},
      {9, "structural anchors", 0, anchors},
      {10, "CLI golden output", 0, cli_golden},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v{false, ""};
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      v.pass = false;
      v.detail += ", over time limit";
    }
    failed += !v.pass;
    std::printf("[%s] criterion %2d: %s (%s; %.2f s%s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                v.detail.c_str(), secs,
                c.limit_seconds > 0 ? (" of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str()
                                    : "");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
