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

#include <string>
#include <utility>
#include <vector>

#include "symtest/asymptotics.hpp"
#include "symtest/report.hpp"
#include "symtest/table.hpp"

namespace symtest {

struct ExampleResult {
  std::string name;
  std::vector<std::string> lines;                     // human-readable summary
  std::vector<std::pair<std::string, Table>> tables;  // (title, table)
  CheckReport report;
};

// Names: ex61, ex62, remark63, remark64, ex65, all. n_max bounds the
// convergence tables (beta_eps rows always use n = 4, 6, 8, 10).
std::vector<ExampleResult> run_examples(const std::string& name, int n_max = 6);

// Convergence table in the CSV layout n, s, value, closed_form, gap, monotone_flag.
Table convergence_csv(const ConvergenceTable& t);

}  // namespace symtest
