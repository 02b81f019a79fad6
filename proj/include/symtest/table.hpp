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

#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace symtest {

using Cell = std::variant<double, long long, bool, std::string>;

// Column-ordered table written as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, const std::string& format, std::ostream& os);

}  // namespace symtest
