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
#include <vector>

namespace symtest {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitParse = 2,
  kExitDimension = 3,
  kExitNumerical = 4,
};

struct RunConfig {
  std::string scenario_path;  // required except for examples and verify
  std::string command;        // psi chernoff hoeffding stein pmin beta-eps convergence examples verify
  std::string s_grid;         // "a:b:points"; empty means the default
  std::string r_grid;
  std::string a_grid;
  std::vector<double> eps;    // empty means {0.1, 0.3}
  int n_max = 0;              // 0 keeps the scenario value
  std::string out_path;       // empty writes to the output stream
  std::string format = "csv";
  std::string name = "all";   // example name
};

const std::vector<std::string>& command_names();

// Runs one command. Tables go to out_path (or `out`), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace symtest
