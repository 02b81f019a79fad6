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
#include <random>

#include "symtest/linalg.hpp"

namespace symtest {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

using Rng = std::mt19937_64;

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng);
ComplexMatrix random_unitary(Index dim, Rng& rng);
HermitianOperator random_hermitian(Index dim, Rng& rng);
// rank = 0 means full rank.
DensityOperator random_density(Index dim, Rng& rng, Index rank = 0);
// Hermitian with spectrum uniform in [0, 1].
HermitianOperator random_test_operator(Index dim, Rng& rng);

}  // namespace symtest
