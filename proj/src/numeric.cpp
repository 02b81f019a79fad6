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

#include "symtest/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtest/error.hpp"

namespace symtest {

double log_sum_exp(const std::vector<double>& terms) {
  double m = kNegInf;
  for (double t : terms) {
    if (std::isnan(t)) throw DomainError("log_sum_exp: NaN term");
    m = std::max(m, t);
  }
  if (m == kNegInf) return kNegInf;
  if (m == kInf) return kInf;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return m + std::log(acc);
}

double log_add_exp(double a, double b) { return log_sum_exp({a, b}); }

double log_binomial(long n, long k) {
  if (k < 0 || k > n) return kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw DomainError("linspace: need at least one point");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < points; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> default_s_grid() { return linspace(-0.5, 2.0, 201); }

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ParseError("grid '" + spec + "' is not of the form a:b:points");
  try {
    std::size_t pos = 0;
    double a = std::stod(parts[0], &pos);
    if (pos != parts[0].size()) throw ParseError("grid '" + spec + "': bad lower bound");
    double b = std::stod(parts[1], &pos);
    if (pos != parts[1].size()) throw ParseError("grid '" + spec + "': bad upper bound");
    int k = std::stoi(parts[2], &pos);
    if (pos != parts[2].size()) throw ParseError("grid '" + spec + "': bad point count");
    if (k < 1) throw ParseError("grid '" + spec + "': point count must be positive");
    if (k > 1 && !(b > a)) throw ParseError("grid '" + spec + "' is not ascending");
    return linspace(a, b, k);
  } catch (const std::logic_error&) {
    throw ParseError("grid '" + spec + "': malformed number");
  }
}

namespace {

// Golden section for a unimodal function on [a, b].
Extremum golden_min(const ScalarFn& f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Extremum{c, fc} : Extremum{d, fd};
}

}  // namespace

Extremum minimize_bracketed(const ScalarFn& f, double lo, double hi,
                            const std::vector<double>& grid, double tol) {
  if (hi < lo) throw DomainError("minimize_bracketed: empty interval");
  std::vector<double> xs{lo};
  for (double x : grid)
    if (x > lo && x < hi) xs.push_back(x);
  if (hi > lo) xs.push_back(hi);
  if (xs.size() == 2) {
    // Coarse fallback when the grid does not sample the interval.
    xs = linspace(lo, hi, 33);
  }
  std::vector<double> fs(xs.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fs[i] = f(xs[i]);
    if (std::isnan(fs[i])) throw DomainError("minimize_bracketed: objective is NaN");
    if (fs[i] < fs[best]) best = i;
  }
  Extremum res{xs[best], fs[best]};
  if (!std::isfinite(res.value)) return res;
  double a = xs[best == 0 ? 0 : best - 1];
  double b = xs[best + 1 < xs.size() ? best + 1 : best];
  if (b > a) {
    Extremum g = golden_min(f, a, b, tol);
    if (g.value < res.value) res = g;
  }
  return res;
}

Extremum maximize_bracketed(const ScalarFn& f, double lo, double hi,
                            const std::vector<double>& grid, double tol) {
  Extremum e = minimize_bracketed([&](double x) { return -f(x); }, lo, hi, grid, tol);
  return {e.x, -e.value};
}

double bisect(const ScalarFn& f, double lo, double hi, double tol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw ConvergenceError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// D(h) has an error series in h; two Richardson levels.
double richardson_first_order(const std::function<double(double)>& d, double h) {
  double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  double r1 = 2 * d2 - d1;
  double r2 = 2 * d3 - d2;
  return (4 * r2 - r1) / 3;
}

}  // namespace

double left_derivative(const ScalarFn& f, double x, double h) {
  double fx = f(x);
  return richardson_first_order([&](double k) { return (fx - f(x - k)) / k; }, h);
}

double right_derivative(const ScalarFn& f, double x, double h) {
  double fx = f(x);
  return richardson_first_order([&](double k) { return (f(x + k) - fx) / k; }, h);
}

double central_derivative(const ScalarFn& f, double x, double h) {
  auto d = [&](double k) { return (f(x + k) - f(x - k)) / (2 * k); };
  double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  double r1 = (4 * d2 - d1) / 3;
  double r2 = (4 * d3 - d2) / 3;
  return (16 * r2 - r1) / 15;
}

}  // namespace symtest
