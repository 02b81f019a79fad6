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

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "symtest/linalg.hpp"

namespace testutil {

using json = nlohmann::ordered_json;

inline json load_fixture(const std::string& id) {
  std::ifstream is(std::string(SYMTEST_FIXTURE_DIR) + "/" + id + ".json");
  if (!is) throw std::runtime_error("missing fixture " + id);
  return json::parse(is);
}

inline symtest::ComplexMatrix to_matrix(const json& j) {
  symtest::ComplexMatrix m(j.size(), j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j[r].size(); ++c)
      m(r, c) = {j[r][c][0].get<double>(), j[r][c][1].get<double>()};
  return m;
}

inline symtest::DensityOperator density(const json& j) { return symtest::DensityOperator(to_matrix(j)); }

inline symtest::ComplexMatrix diag(std::initializer_list<double> v) {
  symtest::ComplexMatrix m = symtest::ComplexMatrix::Zero(v.size(), v.size());
  int k = 0;
  for (double x : v) m(k, k) = x, ++k;
  return m;
}

}  // namespace testutil
