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

#include "symtest/report.hpp"

#include <cmath>
#include <sstream>

namespace symtest {

bool CheckReport::expect_le(double lhs, double rhs, double tol, const std::string& detail) {
  ++checks_;
  bool ok;
  if (std::isnan(lhs) || std::isnan(rhs)) {
    ok = false;
  } else if (std::isinf(lhs) || std::isinf(rhs)) {
    ok = lhs <= rhs;
  } else {
    ok = lhs <= rhs + tol;
  }
  if (!ok) violations_.push_back({name_, detail, lhs, rhs});
  return ok;
}

bool CheckReport::expect_near(double a, double b, double tol, const std::string& detail) {
  ++checks_;
  bool ok = (std::isinf(a) && a == b) || std::abs(a - b) <= tol;
  if (!ok) violations_.push_back({name_, detail, a, b});
  return ok;
}

bool CheckReport::expect(bool cond, const std::string& detail) {
  ++checks_;
  if (!cond) violations_.push_back({name_, detail, 0.0, 0.0});
  return cond;
}

void CheckReport::merge(const CheckReport& other) {
  checks_ += other.checks_;
  for (auto v : other.violations_) {
    if (v.check.empty()) v.check = other.name_;
    violations_.push_back(std::move(v));
  }
  for (const auto& s : other.skipped_) skipped_.push_back(other.name_ + ": " + s);
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os.precision(17);
  os << name_ << ": " << checks_ << " checks, " << violations_.size() << " violations";
  if (!skipped_.empty()) os << ", " << skipped_.size() << " skipped";
  for (const auto& v : violations_) {
    os << "\n  [" << v.check << "] " << v.detail << ": lhs=" << v.lhs << " rhs=" << v.rhs;
  }
  return os.str();
}

}  // namespace symtest
