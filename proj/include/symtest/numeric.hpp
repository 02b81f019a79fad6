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

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace symtest {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms);
double log_add_exp(double a, double b);
double log_binomial(long n, long k);

std::vector<double> linspace(double lo, double hi, int points);
// 201 points on [-0.5, 2]
std::vector<double> default_s_grid();
// "a:b:points"
std::vector<double> parse_grid(const std::string& spec);

struct Extremum {
  double x;
  double value;
};

using ScalarFn = std::function<double(double)>;

// Grid scan over `grid` restricted to [lo, hi] (endpoints added), then
// golden-section on the bracket around the best node. Ties go to smaller x.
Extremum minimize_bracketed(const ScalarFn& f, double lo, double hi,
                            const std::vector<double>& grid, double tol = 1e-10);
Extremum maximize_bracketed(const ScalarFn& f, double lo, double hi,
                            const std::vector<double>& grid, double tol = 1e-10);

// Root of a sign-changing f on [lo, hi].
double bisect(const ScalarFn& f, double lo, double hi, double tol = 1e-12, int max_iter = 400);

// Richardson-extrapolated one-sided and central differences, h in {1e-3, 5e-4, 2.5e-4}.
double left_derivative(const ScalarFn& f, double x, double h = 1e-3);
double right_derivative(const ScalarFn& f, double x, double h = 1e-3);
double central_derivative(const ScalarFn& f, double x, double h = 1e-3);

}  // namespace symtest
