// Copyright 2026 The symtest Authors
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

#include "symtest/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symtest/error.hpp"

namespace symtest {

using json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

cplx parse_entry(const json& e, const std::string& where) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw ParseError(where + ": entry must be a number or an [re, im] pair, got " + e.dump());
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(n) +
                       " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = parse_entry(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityOperator parse_state(const json& j, const std::string& where, std::string& spec) {
  ComplexMatrix m;
  try {
    if (j.is_string()) {
      spec = j.get<std::string>();
      m = construct_state(spec);
    } else {
      spec.clear();
      m = parse_matrix(j, where);
    }
    return DensityOperator(m);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

GroupAction parse_group(const json& j, Index dim) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ParseError("group: expected an object with a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "finite") {
      if (!j.contains("unitaries") || !j["unitaries"].is_array()) {
        throw ParseError("group: finite action needs a 'unitaries' array");
      }
      std::vector<ComplexMatrix> us;
      for (std::size_t k = 0; k < j["unitaries"].size(); ++k) {
        us.push_back(parse_matrix(j["unitaries"][k], "group.unitaries[" + std::to_string(k) + "]"));
      }
      return GroupAction::finite(std::move(us));
    }
    if (type == "torus") {
      if (!j.contains("weights") || !j["weights"].is_array()) {
        throw ParseError("group: torus action needs a 'weights' array");
      }
      std::vector<long> w;
      for (const auto& x : j["weights"]) {
        if (!x.is_number_integer()) throw ParseError("group.weights: entries must be integers");
        w.push_back(x.get<long>());
      }
      return GroupAction::torus(std::move(w));
    }
    if (type == "trivial") return GroupAction::trivial(dim);
  } catch (const DomainError& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
  throw ParseError("group: unknown type '" + type + "' (expected finite, torus or trivial)");
}

}  // namespace

ComplexMatrix construct_state(const std::string& spec) {
  std::istringstream is(spec);
  std::string name;
  double x = 0.0;
  std::string rest;
  if (!(is >> name)) throw ParseError("empty state constructor");
  if (!(is >> x) || (is >> rest)) {
    throw ParseError("state constructor '" + spec + "' must be a name followed by one number");
  }
  try {
    if (name == "bernoulli-conjugated") return bernoulli_conjugated(x);
    if (name == "pure-qubit") return pure_qubit(x);
    if (name == "diag") return diag_state(x);
  } catch (const DomainError& e) {
    throw ParseError(std::string("state constructor '") + spec + "': " + e.what());
  }
  throw ParseError("unknown state constructor '" + name +
                   "' (expected bernoulli-conjugated, pure-qubit or diag)");
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto pos = msg.find("] ");
    throw ParseError("malformed scenario: " + (pos == std::string::npos ? msg : msg.substr(pos + 2)),
                     line, col);
  }
  if (!doc.is_object()) throw ParseError("scenario: top level must be an object");

  static const std::set<std::string> known{"name", "dim", "rho0", "rho1", "group",
                                           "n_max", "params", "kind"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) throw ParseError("scenario: unknown key '" + it.key() + "'");
  }
  for (const char* key : {"name", "dim", "rho0", "rho1", "group", "n_max"}) {
    if (!doc.contains(key)) throw ParseError(std::string("scenario: missing key '") + key + "'");
  }
  if (!doc["name"].is_string()) throw ParseError("name: expected a string");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    throw ParseError("dim: expected a positive integer");
  }
  if (!doc["n_max"].is_number_integer() || doc["n_max"].get<long>() < 1) {
    throw ParseError("n_max: expected a positive integer");
  }

  Scenario sc;
  sc.name = doc["name"].get<std::string>();
  const Index dim = doc["dim"].get<Index>();
  sc.n_max = doc["n_max"].get<int>();
  sc.rho0 = parse_state(doc["rho0"], "rho0", sc.rho0_spec);
  sc.rho1 = parse_state(doc["rho1"], "rho1", sc.rho1_spec);
  sc.action = parse_group(doc["group"], dim);
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) throw ParseError("params: expected an object");
    for (auto it = doc["params"].begin(); it != doc["params"].end(); ++it) {
      if (!it.value().is_number()) throw ParseError("params." + it.key() + ": expected a number");
      sc.params[it.key()] = it.value().get<double>();
    }
  }
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ParseError("kind: expected a string");
    sc.kind = scenario_kind_from_string(doc["kind"].get<std::string>());
  }
  for (const auto* st : {&sc.rho0, &sc.rho1}) {
    if (st->dim() != dim) {
      throw DimensionError("scenario '" + sc.name + "': dim is " + std::to_string(dim) +
                           " but a state is " + std::to_string(st->dim()) + "-dimensional");
    }
  }
  validate_scenario(sc);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& sc) {
  json doc;
  doc["name"] = sc.name;
  doc["dim"] = sc.rho0.dim();
  doc["rho0"] = sc.rho0_spec.empty() ? matrix_json(sc.rho0.matrix()) : json(sc.rho0_spec);
  doc["rho1"] = sc.rho1_spec.empty() ? matrix_json(sc.rho1.matrix()) : json(sc.rho1_spec);
  json g;
  if (sc.action.kind() == GroupKind::TorusWeights) {
    g["type"] = "torus";
    g["weights"] = sc.action.weights();
  } else {
    g["type"] = "finite";
    g["unitaries"] = json::array();
    for (const auto& u : sc.action.unitaries()) g["unitaries"].push_back(matrix_json(u));
  }
  doc["group"] = g;
  doc["n_max"] = sc.n_max;
  if (!sc.params.empty()) {
    json p = json::object();
    for (const auto& [k, v] : sc.params) p[k] = v;
    doc["params"] = p;
  }
  if (sc.kind != ScenarioKind::None) doc["kind"] = to_string(sc.kind);
  return doc.dump(2) + "\n";
}

}  // namespace symtest
