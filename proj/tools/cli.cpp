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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "lattice_orbit/builtins.hpp"
#include "lattice_orbit/json_io.hpp"

namespace lattice_orbit::cli {

namespace {

using json::Json;

Coords parse_coords(const std::string& text) {
  Coords c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CLI::ValidationError("--coords", "'" + item + "' is not an integer");
    c.push_back(static_cast<Int>(v));
  }
  if (c.empty()) throw CLI::ValidationError("--coords", "empty coordinate list");
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return Json::parse(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void render_pretty(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object()))
        render_pretty(v, out, key);
      else
        out << key << ": " << v.dump() << '\n';
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_pretty(j[i], out, prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

std::string document(const Json& j) { return j.dump() + "\n"; }

// CLI11 reads "-1,2" after a flag as another option; glue such values onto
// their flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next.size() > 1 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1]))) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

struct Outcome {
  Json doc;
  int code = kExitOk;
};

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit labels of primitive vectors in B(2)+U lattices (Enriques lattice and friends)",
               "lattice-orbit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");

  std::function<Outcome()> action;

  std::string lattice_name = "Lminus";
  std::string coords_text;

  // info
  auto* info = app.add_subcommand("info", "Built-in lattices, or one lattice's invariants");
  std::optional<std::string> info_lattice;
  info->add_option("--lattice", info_lattice, "Built-in name or path to lattice JSON");
  info->callback([&] {
    action = [&] {
      if (!info_lattice) {
        Json names = Json::array();
        for (const auto& n : builtin::names()) names.push_back(n);
        return Outcome{Json{{"lattices", names}}};
      }
      LatticePtr l;
      try {
        l = builtin::resolve(*info_lattice);
      } catch (const Error&) {
        l = json::lattice_from_json(read_json_file(*info_lattice));
      }
      const Signature s = signature(*l);
      Json j = json::to_json(*l);
      j["signature"] = {s.positive, s.negative, s.zero};
      j["even"] = is_even(*l);
      j["determinant"] = determinant(l->gram());
      j["unimodular"] = is_unimodular(*l);
      return Outcome{j};
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Orbit label of a primitive vector");
  cls->add_option("--lattice", lattice_name, "B(2)+U lattice: Lminus or U2U")->capture_default_str();
  cls->add_option("--coords", coords_text, "Comma-separated coordinates in constructor order");
  std::optional<std::string> validate_path;
  cls->add_option("--validate", validate_path,
                  "Re-derive a previously emitted report; exit 3 unless byte-identical");
  cls->callback([&] {
    if (!validate_path && coords_text.empty())
      throw CLI::RequiredError("--coords (or --validate)");
    action = [&] {
      if (validate_path) {
        const std::string original = read_file(*validate_path);
        const Json j = Json::parse(original);
        const std::string again = document(json::to_json(classify(json::vector_from_json(j))));
        return Outcome{Json::parse(again), again == original ? kExitOk : kExitViolation};
      }
      LatticeVector v(builtin::resolve(lattice_name), parse_coords(coords_text));
      return Outcome{json::to_json(classify(v))};
    };
  });

  // rep
  auto* rep = app.add_subcommand("rep", "Canonical representative of a (norm, label) orbit");
  std::optional<Int> rep_norm, rep_n;
  std::string rep_class;
  std::string rep_lattice = "Lminus";
  auto* norm_opt = rep->add_option("--norm", rep_norm, "Full norm 2n");
  rep->add_option("--n", rep_n, "Half norm n")->excludes(norm_opt);
  rep->add_option("--class", rep_class, "odd | characteristic | ordinary")->required();
  rep->add_option("--lattice", rep_lattice, "Lminus or U2U")->capture_default_str();
  rep->callback([&] {
    if (!rep_norm && !rep_n) throw CLI::RequiredError("--norm or --n");
    action = [&] {
      const Int norm = rep_norm ? *rep_norm : checked::mul(2, *rep_n);
      const OrbitLabel label = parse_label(rep_class);
      const LatticeVector v = representative(builtin::resolve(rep_lattice), norm, label);
      return Outcome{Json{{"lattice", v.lattice()->name()},
                          {"norm", norm},
                          {"n", norm / 2},
                          {"label", to_string(label)},
                          {"coords", v.coords()}}};
    };
  });

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "Dilatation into B + (1/2) I_{1,1}");
  phi_cmd->add_option("--lattice", lattice_name, "Lminus or U2U")->capture_default_str();
  phi_cmd->add_option("--coords", coords_text, "Comma-separated coordinates")->required();
  phi_cmd->callback([&] {
    action = [&] {
      const HalfVector h = phi(LatticeVector(builtin::resolve(lattice_name), parse_coords(coords_text)));
      Json j = json::to_json(h);
      j["integral"] = is_integral(h);
      j["half_norm"] = half_norm(h);
      return Outcome{j};
    };
  });

  // phi-inv
  auto* phi_inv = app.add_subcommand("phi-inv", "Inverse dilatation from doubled coordinates");
  std::string base_name = "E8_U_I11";
  std::string doubled_text;
  phi_inv->add_option("--base", base_name, "E8_U_I11 or U_I11")->capture_default_str();
  phi_inv->add_option("--doubled", doubled_text, "Comma-separated doubled coordinates")->required();
  phi_inv->callback([&] {
    action = [&] {
      const LatticeVector v =
          phi_inverse(HalfVector(builtin::resolve(base_name), parse_coords(doubled_text)));
      return Outcome{json::to_json(v)};
    };
  });

  // even-type
  auto* even = app.add_subcommand("even-type", "Even-type test for a primitive vector of Lminus");
  even->add_option("--coords", coords_text, "Comma-separated Lminus coordinates")->required();
  even->callback([&] {
    action = [&] {
      const LatticeVector v(builtin::lminus(), parse_coords(coords_text));
      return Outcome{Json{{"coords", v.coords()}, {"norm", norm(v)}, {"even_type", is_even_type(v)}}};
    };
  });

  // witness
  auto* wit = app.add_subcommand("witness", "Search Lplus for an even-type witness");
  Int witness_bound = 2;
  wit->add_option("--coords", coords_text, "Comma-separated Lminus coordinates")->required();
  wit->add_option("--bound", witness_bound, "Coordinate box for the search")->capture_default_str();
  wit->callback([&] {
    action = [&] {
      const LatticeVector v(builtin::lminus(), parse_coords(coords_text));
      Json j{{"coords", v.coords()}, {"norm", norm(v)}, {"bound", witness_bound}};
      j.update(json::to_json(even_witness(v, witness_bound)));
      return Outcome{j};
    };
  });

  // heegner
  auto* heeg = app.add_subcommand("heegner", "Component reports of Heegner divisors over an n range");
  std::optional<Int> from_n, to_n, from_norm, to_norm;
  auto* from_opt = heeg->add_option("--from", from_n, "First n");
  auto* to_opt = heeg->add_option("--to", to_n, "Last n");
  heeg->add_option("--norm-from", from_norm, "First norm 2n")->excludes(from_opt);
  heeg->add_option("--norm-to", to_norm, "Last norm 2n")->excludes(to_opt);
  heeg->callback([&] {
    if (!(from_n || from_norm) || !(to_n || to_norm))
      throw CLI::RequiredError("--from/--norm-from and --to/--norm-to");
    action = [&] {
      // Norm bounds round inward to the even norms they contain.
      const Int lo = from_n ? *from_n : (*from_norm + (is_odd(*from_norm) ? 1 : 0)) / 2;
      const Int hi = to_n ? *to_n : (*to_norm - (is_odd(*to_norm) ? 1 : 0)) / 2;
      Json reports = Json::array();
      for (const auto& r : heegner_report(lo, hi)) reports.push_back(json::to_json(r));
      return Outcome{Json{{"lattice", "Lminus"}, {"reports", std::move(reports)}}};
    };
  });

  // oracle-invariance
  auto* inv = app.add_subcommand("oracle-invariance", "Label invariance under sampled isometry words");
  oracle::InvarianceOptions inv_opts;
  std::string inv_lattice = "Lminus";
  std::optional<std::string> isometry_file;
  inv->add_option("--lattice", inv_lattice, "Lminus or U2U")->capture_default_str();
  inv->add_option("--samples", inv_opts.samples)->capture_default_str();
  inv->add_option("--seed", inv_opts.seed)->capture_default_str();
  inv->add_option("--bound", inv_opts.bound)->capture_default_str();
  inv->add_option("--length", inv_opts.word_length, "Isometry word length")->capture_default_str();
  inv->add_option("--isometry-file", isometry_file,
                  "JSON {\"matrices\": [[[int]]]} of extra matrices; each must certify");
  inv->callback([&] {
    action = [&] {
      const LatticePtr l = builtin::resolve(inv_lattice);
      if (isometry_file) {
        const Json j = read_json_file(*isometry_file);
        for (const auto& m : j.at("matrices")) {
          std::vector<std::vector<Int>> rows;
          for (const auto& row : m) rows.push_back(row.get<std::vector<Int>>());
          inv_opts.extra_matrices.push_back(IntMatrix::from_rows(rows));
        }
      }
      const auto r = oracle::invariance_suite(l, inv_opts);
      Json stats{{"lattice", l->name()},          {"samples", inv_opts.samples},
                 {"seed", inv_opts.seed},         {"bound", inv_opts.bound},
                 {"word_length", inv_opts.word_length}, {"checked", r.checked}};
      Json ce = r.counterexample ? Json(r.counterexample->coords()) : Json(nullptr);
      return Outcome{json::suite_result("invariance", r.pass, ce, std::move(stats)),
                     r.pass ? kExitOk : kExitViolation};
    };
  });

  // oracle-enumerate
  auto* en = app.add_subcommand("oracle-enumerate", "Primitive vectors in a coordinate box");
  std::string en_lattice = "U2U";
  Int en_bound = 2;
  std::optional<Int> en_norm;
  en->add_option("--lattice", en_lattice)->capture_default_str();
  en->add_option("--bound", en_bound)->capture_default_str();
  en->add_option("--norm", en_norm, "Keep only this norm");
  en->callback([&] {
    action = [&] {
      return Outcome{json::to_json(oracle::enumerate_primitive(builtin::resolve(en_lattice), en_bound, en_norm))};
    };
  });

  // oracle-connectivity
  auto* con = app.add_subcommand("oracle-connectivity", "Union-find over generator moves in a box");
  std::string con_lattice = "U2U";
  Int con_norm = 0, con_bound = 5;
  std::uint64_t con_seed = 7;
  std::size_t con_walks = 10000, con_length = 1;
  con->add_option("--lattice", con_lattice)->capture_default_str();
  con->add_option("--norm", con_norm)->required();
  con->add_option("--bound", con_bound)->capture_default_str();
  con->add_option("--seed", con_seed)->capture_default_str();
  con->add_option("--walks", con_walks)->capture_default_str();
  con->add_option("--length", con_length)->capture_default_str();
  con->callback([&] {
    action = [&] {
      const auto r = oracle::connectivity_experiment(builtin::resolve(con_lattice), con_norm, con_bound,
                                                     con_seed, con_walks, con_length);
      const bool pass = r.mixed_label_components == 0;
      return Outcome{json::suite_result("connectivity", pass, nullptr, json::to_json(r)),
                     pass ? kExitOk : kExitViolation};
    };
  });

  // oracle-wall
  auto* wall = app.add_subcommand("oracle-wall", "Characteristic norms mod 8 in I_{s,t}");
  std::size_t wall_s = 2, wall_t = 2;
  Int wall_bound = 3;
  wall->add_option("--s", wall_s)->capture_default_str();
  wall->add_option("--t", wall_t)->capture_default_str();
  wall->add_option("--bound", wall_bound)->capture_default_str();
  wall->callback([&] {
    action = [&] {
      const auto r = oracle::wall_scan(wall_s, wall_t, wall_bound);
      Json ce = r.counterexample ? Json(r.counterexample->coords()) : Json(nullptr);
      Json stats{{"s", wall_s}, {"t", wall_t}, {"bound", wall_bound},
                 {"characteristic_vectors", r.characteristic_vectors}};
      return Outcome{json::suite_result("wall", r.pass, ce, std::move(stats)),
                     r.pass ? kExitOk : kExitViolation};
    };
  });

  // oracle-e8
  auto* e8 = app.add_subcommand("oracle-e8", "Count vectors of one norm in E8");
  Int e8_norm = -2;
  e8->add_option("--norm", e8_norm)->capture_default_str();
  e8->callback([&] {
    action = [&] {
      const std::size_t count = oracle::e8_root_count(e8_norm);
      const bool pass = e8_norm != -2 || count == 240;
      return Outcome{json::suite_result("e8", pass, nullptr, Json{{"norm", e8_norm}, {"count", count}}),
                     pass ? kExitOk : kExitViolation};
    };
  });

  try {
    std::vector<std::string> args = glue_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lattice-orbit: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Outcome o = action();
    if (pretty)
      render_pretty(o.doc, out);
    else
      out << document(o.doc);
    return o.code;
  } catch (const Error& e) {
    out << document(Json{{"error", e.name()}, {"message", e.detail()}});
    return kExitDomain;
  } catch (const CLI::ParseError& e) {
    err << "lattice-orbit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    out << document(Json{{"error", "InvalidArgument"}, {"message", e.what()}});
    return kExitDomain;
  }
}

}  // namespace lattice_orbit::cli
