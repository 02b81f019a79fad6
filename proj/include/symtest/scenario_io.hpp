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

#include "symtest/asymptotics.hpp"

namespace symtest {

// JSON scenario documents. Schema:
//   name     string
//   dim      integer, must match both states and the group
//   rho0     matrix (rows of [re, im] pairs, plain numbers allowed) or a
//   rho1     constructor string: "bernoulli-conjugated l", "pure-qubit l", "diag a"
//   group    {"type": "finite", "unitaries": [matrix, ...]} or
//            {"type": "torus", "weights": [int, ...]} or {"type": "trivial"}
//   n_max    positive integer
//   params   optional object of named reals
//   kind     optional closed-form kind ("Z2Commuting", ...)
// Syntax errors throw ParseError with line and column; invalid states,
// unknown constructors and unknown keys throw ParseError naming the field.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& sc);

// "diag 0.3" -> 2x2 matrix
ComplexMatrix construct_state(const std::string& spec);

}  // namespace symtest
