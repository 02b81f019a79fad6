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

#include <cstddef>
#include <string>
#include <vector>

namespace symtest {

struct Violation {
  std::string check;
  std::string detail;
  double lhs;
  double rhs;
};

// Accumulates inequality checks; violations are data, never exceptions.
class CheckReport {
 public:
  explicit CheckReport(std::string name = "") : name_(std::move(name)) {}

  // lhs <= rhs + tol. Infinite sides follow the extended reals; NaN fails.
  bool expect_le(double lhs, double rhs, double tol, const std::string& detail);
  bool expect_ge(double lhs, double rhs, double tol, const std::string& detail) {
    return expect_le(rhs, lhs, tol, detail);
  }
  bool expect_near(double a, double b, double tol, const std::string& detail);
  bool expect(bool cond, const std::string& detail);
  void skip(const std::string& reason) { skipped_.push_back(reason); }
  void merge(const CheckReport& other);

  const std::string& name() const { return name_; }
  bool ok() const { return violations_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& skipped() const { return skipped_; }
  std::string summary() const;

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::vector<Violation> violations_;
  std::vector<std::string> skipped_;
};

}  // namespace symtest
