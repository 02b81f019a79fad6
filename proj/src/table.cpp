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

#include "symtest/table.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "symtest/error.hpp"

namespace symtest {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DimensionError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_text(const Cell& c) {
  struct V {
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(V{}, c);
}

nlohmann::ordered_json json_value(const Cell& c) {
  struct V {
    nlohmann::ordered_json operator()(double x) const {
      // JSON has no infinities; keep the same spelling as the CSV writer.
      if (!std::isfinite(x)) return format_double(x);
      return x;
    }
    nlohmann::ordered_json operator()(long long x) const { return x; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_text(row[j]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) obj[t.columns[j]] = json_value(row[j]);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    write_csv(t, os);
  } else if (format == "json") {
    write_json(t, os);
  } else {
    throw ParseError("unknown output format '" + format + "' (expected csv or json)");
  }
}

}  // namespace symtest
