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

#include "lattice_orbit/json_io.hpp"

#include "lattice_orbit/builtins.hpp"

namespace lattice_orbit::json {

namespace {

Json label_set(const std::set<OrbitLabel>& labels) {
  Json a = Json::array();
  for (OrbitLabel l : labels) a.push_back(to_string(l));
  return a;
}

Coords coords_from(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorCode::InvalidArgument, "missing integer array '" + key + "'");
  Coords c;
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "non-integer coordinate");
    c.push_back(x.get<Int>());
  }
  return c;
}

}  // namespace

Json to_json(const Lattice& l) {
  return Json{{"name", l.name()}, {"rank", l.rank()}, {"gram", l.gram().to_rows()}};
}

Json to_json(const LatticeVector& v) {
  return Json{{"lattice", v.lattice()->name()}, {"coords", v.coords()}};
}

Json to_json(const HalfVector& h) {
  return Json{{"base", h.base()->name()}, {"doubled_coords", h.doubled_coords()}};
}

Json to_json(const Isometry& g) {
  return Json{{"lattice", g.lattice()->name()}, {"matrix", g.matrix().to_rows()}};
}

Json to_json(const ClassificationReport& r) {
  return Json{{"lattice", r.vector.lattice()->name()},
              {"coords", r.vector.coords()},
              {"norm", r.norm},
              {"n", r.half_n},
              {"primitive", r.primitive},
              {"type", to_string(r.type_in_lattice)},
              {"phi_integral", r.phi_integral},
              {"image_type", to_string(r.image_type)},
              {"label", to_string(r.label)}};
}

Json to_json(const HeegnerReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"label", to_string(c.label)}, {"representative", c.representative.coords()}});
  return Json{{"n", r.n},
              {"norm", r.norm()},
              {"component_count", r.component_count()},
              {"components", std::move(comps)}};
}

Json to_json(const WitnessResult& r) {
  return Json{{"found", r.witness.has_value()},
              {"witness", r.witness ? Json(r.witness->coords()) : Json(nullptr)},
              {"parity_obstruction", r.parity_obstruction},
              {"from_representative", r.from_representative},
              {"candidates_checked", r.candidates_checked}};
}

Json to_json(const oracle::BoxScan& s) {
  Json vs = Json::array();
  for (const auto& v : s.vectors) vs.push_back(v.coords());
  return Json{{"lattice", s.lattice->name()},
              {"bound", s.bound},
              {"norm", s.norm_filter ? Json(*s.norm_filter) : Json(nullptr)},
              {"count", s.vectors.size()},
              {"vectors", std::move(vs)}};
}

Json to_json(const oracle::ConnectivityReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"size", c.size},
                         {"labels_present", label_set(c.labels_present)},
                         {"contains_representative", c.contains_representative}});
  return Json{{"norm", r.norm},
              {"nodes", r.nodes},
              {"edges_attempted", r.edges_attempted},
              {"edges_in_box", r.edges_in_box},
              {"component_count", r.components.size()},
              {"mixed_label_components", r.mixed_label_components},
              {"labels_overall", label_set(r.labels_overall)},
              {"components", std::move(comps)}};
}

Json suite_result(std::string_view suite, bool pass, const Json& counterexample, Json stats) {
  return Json{{"suite", suite},
              {"status", pass ? "pass" : "fail"},
              {"counterexample", counterexample},
              {"stats", std::move(stats)}};
}

LatticePtr lattice_from_json(const Json& j) {
  if (j.is_string()) return builtin::resolve(j.get<std::string>());
  if (!j.is_object() || !j.contains("gram"))
    throw Error(ErrorCode::InvalidArgument, "lattice must be a name or {name, rank, gram}");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j.at("gram")) rows.push_back(row.get<std::vector<Int>>());
  IntMatrix g = IntMatrix::from_rows(rows);
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != g.rows())
    throw Error(ErrorCode::RankMismatch, "rank field disagrees with gram");
  const std::string name = j.value("name", std::string("inline"));
  try {
    LatticePtr known = builtin::resolve(name);
    if (known->gram() == g) return known;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownLattice) throw;
  }
  return std::make_shared<const Lattice>(name, std::move(g));
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.contains("lattice")) throw Error(ErrorCode::InvalidArgument, "vector without lattice");
  return LatticeVector(lattice_from_json(j.at("lattice")), coords_from(j, "coords"));
}

HalfVector half_vector_from_json(const Json& j) {
  if (!j.contains("base")) throw Error(ErrorCode::InvalidArgument, "half vector without base");
  return HalfVector(lattice_from_json(j.at("base")), coords_from(j, "doubled_coords"));
}

Isometry isometry_from_json(const Json& j) {
  if (!j.contains("lattice") || !j.contains("matrix"))
    throw Error(ErrorCode::InvalidArgument, "isometry needs lattice and matrix");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j.at("matrix")) rows.push_back(row.get<std::vector<Int>>());
  return Isometry::certify(lattice_from_json(j.at("lattice")), IntMatrix::from_rows(rows));
}

}  // namespace lattice_orbit::json
