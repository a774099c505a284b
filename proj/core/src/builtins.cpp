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

#include "lattice_orbit/builtins.hpp"

#include <charconv>

namespace lattice_orbit::builtin {

namespace {

LatticePtr renamed(const LatticePtr& l, std::string name) {
  return std::make_shared<const Lattice>(std::move(name), l->gram(), l->shape());
}

}  // namespace

const LatticePtr& U() {
  static const LatticePtr l = make_U();
  return l;
}

const LatticePtr& U2() {
  static const LatticePtr l = renamed(twist(*U(), 2), "U2");
  return l;
}

const LatticePtr& E8() {
  static const LatticePtr l = make_E8();
  return l;
}

const LatticePtr& E8_2() {
  static const LatticePtr l = renamed(twist(*E8(), 2), "E8_2");
  return l;
}

const LatticePtr& B_U() {
  static const LatticePtr l = renamed(U(), "B_U");
  return l;
}

const LatticePtr& E8_U() {
  static const LatticePtr l = direct_sum(*E8(), *U(), "E8_U");
  return l;
}

const LatticePtr& lminus() {
  static const LatticePtr l = make_twisted_plus_u(E8_U(), "Lminus");
  return l;
}

const LatticePtr& lplus() {
  static const LatticePtr l = direct_sum(*E8_2(), *U2(), "Lplus");
  return l;
}

const LatticePtr& lambda() {
  static const LatticePtr l = [] {
    auto e8e8 = direct_sum(*E8(), *E8());
    auto u3 = direct_sum(*direct_sum(*U(), *U()), *U());
    return direct_sum(*e8e8, *u3, "Lambda");
  }();
  return l;
}

const LatticePtr& u2u() {
  static const LatticePtr l = make_twisted_plus_u(U(), "U2U");
  return l;
}

const LatticePtr& e8_u_i11() {
  static const LatticePtr l = make_b_plus_i11(E8_U(), "E8_U_I11");
  return l;
}

const LatticePtr& u_i11() {
  static const LatticePtr l = make_b_plus_i11(U(), "U_I11");
  return l;
}

LatticePtr twisted_plus_u_of(const LatticePtr& b) {
  if (*b == *E8_U()) return lminus();
  if (b->gram() == U()->gram()) return u2u();
  return make_twisted_plus_u(b, b->name() + "(2)+U");
}

LatticePtr b_plus_i11_of(const LatticePtr& b) {
  if (*b == *E8_U()) return e8_u_i11();
  if (b->gram() == U()->gram()) return u_i11();
  return make_b_plus_i11(b, b->name() + "+I_1_1");
}

namespace {

bool parse_size(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

LatticePtr resolve(std::string_view name) {
  if (name == "U") return U();
  if (name == "U2") return U2();
  if (name == "E8") return E8();
  if (name == "E8_2") return E8_2();
  if (name == "B_U") return B_U();
  if (name == "E8_U") return E8_U();
  if (name == "Lminus") return lminus();
  if (name == "Lplus") return lplus();
  if (name == "Lambda") return lambda();
  if (name == "U2U") return u2u();
  if (name == "E8_U_I11") return e8_u_i11();
  if (name == "U_I11") return u_i11();
  if (name.starts_with("I_")) {
    const auto rest = name.substr(2);
    const auto sep = rest.find('_');
    std::size_t s = 0, t = 0;
    if (sep != std::string_view::npos && parse_size(rest.substr(0, sep), s) &&
        parse_size(rest.substr(sep + 1), t))
      return make_I(s, t);
  }
  throw Error(ErrorCode::UnknownLattice, std::string(name));
}

std::vector<std::string> names() {
  return {"U", "U2", "E8", "E8_2", "I_s_t", "B_U", "E8_U", "Lminus",
          "Lplus", "Lambda", "U2U", "E8_U_I11", "U_I11"};
}

}  // namespace lattice_orbit::builtin
