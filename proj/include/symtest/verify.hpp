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

#include <cstdint>
#include <vector>

#include "symtest/asymptotics.hpp"
#include "symtest/random.hpp"
#include "symtest/report.hpp"

namespace symtest {

// Finite-n inequality suite for one scenario, n = 1..n_max. Checks that need
// an invariant rho1 (or invariant support) are skipped, with a reason, when
// the scenario does not have it.
std::vector<CheckReport> verify_scenario(const Scenario& sc);

// Random batteries that do not depend on a scenario: Tr rho^s sigma^(1-s) >=
// F^2, data processing along the twirl, the P_min sandwich and NP optimality.
std::vector<CheckReport> verify_random(std::uint64_t seed = kDefaultSeed);

// C/4 <= C_M <= C (and C/2 <= C_M) for the torus pure-vs-mixed family, and the
// C_M <= min_g C(rho0, rho1 o Ad u_g) <= C chain for the Z2 family.
std::vector<CheckReport> verify_mean_chernoff();

// The fixed scenarios used by the full suite.
std::vector<Scenario> reference_scenarios(int n_max);

std::vector<CheckReport> verify_reference_suite(int n_max, std::uint64_t seed = kDefaultSeed);

std::size_t count_violations(const std::vector<CheckReport>& reports);

}  // namespace symtest
