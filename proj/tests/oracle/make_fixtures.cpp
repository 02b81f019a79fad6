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

// Writes the frozen fixtures. Usage: make_fixtures OUTDIR
// Every value here comes from the oracle; the library is not linked.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "oracle.hpp"

using namespace oracle;

namespace {

std::filesystem::path g_out;

void emit(const std::string& id, const std::string& method, const json& inputs, const json& value) {
  json j;
  j["id"] = id;
  j["method"] = method;
  j["seed"] = kSeed;
  j["inputs"] = inputs;
  j["value"] = value;
  std::ofstream os(g_out / (id + ".json"));
  os << j.dump(1) << "\n";
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("oracle self-check failed: " + what);
}

std::vector<double> default_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 200; ++k) g.push_back(-0.5 + 2.5 * k / 200.0);
  return g;
}

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat plus_state() { return Mat::Constant(2, 2, cd(0.5, 0.0)); }

Mat bern(double l) {
  Mat m(2, 2);
  m << 0.5, l - 0.5, l - 0.5, 0.5;
  return m;
}

Mat pure(double l) {
  Mat m(2, 2);
  const double c = std::sqrt(l * (1 - l));
  m << l, c, c, 1 - l;
  return m;
}

std::vector<Mat> z2() { return {Mat::Identity(2, 2), diag2(1, -1)}; }

std::vector<Mat> z3_clock() {
  const double pi = std::acos(-1.0);
  std::vector<Mat> out;
  for (int k = 0; k < 3; ++k) {
    Mat u = Mat::Zero(3, 3);
    for (int j = 0; j < 3; ++j) u(j, j) = std::polar(1.0, 2 * pi * k * j / 3.0);
    out.push_back(u);
  }
  return out;
}

json real_vec(const Vec& v) {
  json a = json::array();
  for (int k = 0; k < v.size(); ++k) a.push_back(v(k));
  return a;
}

long double ex62_psi(long double alpha, long double s) { return ex62_limit(alpha, s); }

void linalg_fixtures() {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  emit("linalg_pauli_x_eigenvalues", "jacobi", {{"matrix", matrix_to_json(x)}},
       real_vec(jacobi_eigh(x).values));

  std::mt19937_64 rng(kSeed);
  Mat r = random_density(4, rng, 2);
  emit("linalg_support_rank2", "jacobi support projection", {{"rho", matrix_to_json(r)}},
       matrix_to_json(support(r)));

  Mat a = random_hermitian(3, rng), b = random_hermitian(3, rng);
  cd t = kron(a, b).trace();
  emit("linalg_kron_trace", "explicit block kron",
       {{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}}, json::array({t.real(), t.imag()}));

  Mat p = random_density(2, rng), q = random_density(2, rng);
  emit("linalg_qubit_fidelity", "jacobi sqrt", {{"rho", matrix_to_json(p)}, {"sigma", matrix_to_json(q)}},
       fidelity_dense(p, q));

  Mat e6 = random_hermitian(6, rng);
  emit("linalg_random_eigenvalues", "jacobi", {{"h", matrix_to_json(e6)}}, real_vec(jacobi_eigh(e6).values));

  Mat h = random_hermitian(5, rng);
  emit("linalg_trace_norm", "jacobi", {{"h", matrix_to_json(h)}}, trace_norm_hermitian(h));
}

void group_fixtures() {
  const double alpha = 0.3;
  Mat rho0 = kron_power(plus_state(), 2);
  std::vector<long> w2 = torus_weights({0, 1}, 2);
  Mat tw = twirl_torus(rho0, w2);
  emit("groups_ex62_twirl_n2", "riemann sum over the circle, K=4096",
       {{"alpha", alpha}, {"n", 2}}, matrix_to_json(tw));

  // Pinch by the spectral projections of diag(a, 1-a)^{x2}: these are the weight blocks.
  Mat pinched = Mat::Zero(4, 4);
  const std::vector<std::vector<int>> blocks{{0}, {1, 2}, {3}};
  for (const auto& blk : blocks)
    for (int i : blk)
      for (int j : blk) pinched(i, j) = tw(i, j);
  emit("groups_ex62_pinching_n2", "explicit block cut", {{"alpha", alpha}, {"n", 2}},
       matrix_to_json(pinched));

  std::mt19937_64 rng(kSeed + 1);
  struct Case {
    std::string id;
    int dim;
    int n;
    std::vector<Mat> us;
    std::vector<long> weights;
  };
  std::vector<Case> cases{{"z2", 2, 2, z2(), {}},
                          {"z3_clock", 3, 1, z3_clock(), {}},
                          {"torus01", 2, 2, {}, {0, 1}},
                          {"torus012", 3, 1, {}, {0, 1, 2}}};
  for (const auto& c : cases) {
    json items = json::array();
    const int dim = static_cast<int>(std::pow(c.dim, c.n));
    for (int k = 0; k < 20; ++k) {
      Mat x = random_hermitian(dim, rng);
      Mat t = c.us.empty() ? twirl_torus(x, torus_weights(c.weights, c.n))
                           : twirl_finite(x, finite_power(c.us, c.n));
      items.push_back({{"x", matrix_to_json(x)}, {"twirl", matrix_to_json(t)}});
    }
    emit("groups_twirl_" + c.id, c.us.empty() ? "riemann sum over the circle, K=4096" : "group average",
         {{"action", c.id}, {"n", c.n}}, items);
  }

  json items = json::array();
  std::uniform_int_distribution<int> pick(1, 3);
  for (int k = 0; k < 20; ++k) {
    int m = pick(rng), d = pick(rng);
    Mat a = random_hermitian(m * d, rng);
    items.push_back({{"m", m}, {"d", d}, {"a", matrix_to_json(a)},
                     {"value", matrix_to_json(partial_trace_embed(a, m, d))}});
  }
  emit("groups_weyl_partial_trace", "index contraction", json::object(), items);

  json z2g = json::array(), tg = json::array();
  for (int n = 1; n <= 6; ++n) {
    z2g.push_back(std::log(2.0) / n);
    tg.push_back(std::log(n + 1.0) / n);
  }
  emit("groups_dim_growth", "irrep count: abelian groups, all irreps one-dimensional",
       {{"n_max", 6}}, {{"z2", z2g}, {"torus01", tg}});
}

void divergence_fixtures() {
  const std::vector<double> s3{-0.25, 0.25, 0.5, 0.75, 1.25, 1.5};
  json rows = json::array();
  const int n = 3;
  Mat r0 = twirl_finite(kron_power(bern(0.2), n), finite_power(z2(), n));
  Mat r1 = twirl_finite(kron_power(bern(0.7), n), finite_power(z2(), n));
  for (double s : s3) {
    double a = static_cast<double>(block_scalar_psi("ex61", 0.2, 0.7, n, s));
    double b = psi_dense(r0, r1, s);
    require(std::fabs(a - b) < 1e-10, "ex61 dense vs block");
    rows.push_back({{"s", s}, {"block", a}, {"dense", b}});
  }
  emit("divergences_ex61_psi_n3", "block sum and jacobi on the group average",
       {{"lambda", 0.2}, {"mu", 0.7}, {"n", n}}, rows);

  json ren = json::array();
  for (long double al : {0.3L, 0.5L, 0.7L}) {
    long double t = std::pow(0.2L, al) * std::pow(0.5L, 1 - al) + std::pow(0.8L, al) * std::pow(0.5L, 1 - al);
    ren.push_back({{"alpha", static_cast<double>(al)}, {"value", static_cast<double>(std::log(t) / (al - 1))}});
  }
  emit("divergences_classical_renyi", "scalar sum", {{"p", {0.2, 0.8}}, {"q", {0.5, 0.5}}}, ren);

  Mat f0 = twirl_torus(kron_power(pure(0.3), 2), torus_weights({0, 1}, 2));
  Mat f1 = twirl_torus(kron_power(pure(0.6), 2), torus_weights({0, 1}, 2));
  emit("divergences_ex65_fidelity_n2", "jacobi sqrt on the twirled pair",
       {{"lambda", 0.3}, {"mu", 0.6}, {"n", 2}},
       {{"single", fidelity_dense(pure(0.3), pure(0.6))}, {"n2", fidelity_dense(f0, f1)}});

  json hoeff = json::array();
  for (double al : {0.3, 0.5}) {
    for (double r : {0.05, 0.1, 0.2}) {
      hoeff.push_back({{"alpha", al}, {"r", r},
                       {"value", static_cast<double>(hoeffding_dense(ex62_psi, al, r, 100000))}});
    }
  }
  emit("divergences_ex62_hoeffding", "dense grid of 1e5 points on [0,1)", json::object(), hoeff);
}

void test_fixtures() {
  const double alpha = 0.3;
  std::vector<long double> p, q;
  ex62_outcomes(alpha, 3, p, q);
  json np = json::array();
  for (double a : {-0.5, -0.2, 0.0, 0.3, 0.6}) {
    np.push_back({{"a", a}, {"value", static_cast<double>(classical_pmin(p, q, std::exp(-3.0L * a)))}});
  }
  emit("tests_ex62_pmin_n3", "classical outcome lists", {{"alpha", alpha}, {"n", 3}}, np);

  json half = json::array();
  for (int n = 1; n <= 10; ++n) {
    ex62_outcomes(0.5, n, p, q);
    long double v = classical_pmin(p, q, 1.0L);
    require(std::fabs(v - (n + 1) / std::pow(2.0L, n)) < 1e-15L, "pmin (n+1)/2^n");
    half.push_back(static_cast<double>(v));
  }
  emit("tests_ex62_pmin_half", "classical outcome lists", {{"alpha", 0.5}, {"a", 0.0}}, half);

  json beta = json::array();
  for (int n : {4, 6, 8, 10}) {
    ex62_outcomes(alpha, n, p, q);
    for (double eps : {0.1, 0.3}) {
      beta.push_back({{"n", n}, {"eps", eps}, {"value", static_cast<double>(classical_beta_eps(p, q, eps))}});
    }
  }
  emit("tests_ex62_beta_eps", "classical likelihood-ratio ordering", {{"alpha", alpha}}, beta);

  // Dense check of the battery against the optimum at n = 2.
  Mat r0 = twirl_torus(kron_power(plus_state(), 2), torus_weights({0, 1}, 2));
  Mat r1 = kron_power(diag2(alpha, 1 - alpha), 2);
  ex62_outcomes(alpha, 2, p, q);
  Battery bat = pmin_random_battery(r0, r1, 0.1, 2, 200, kSeed);
  long double opt = classical_pmin(p, q, std::exp(-0.2L));
  require(bat.min_combined >= opt - 1e-12, "random tests never beat p_min");
  emit("tests_ex62_random_battery", "200 random tests", {{"alpha", alpha}, {"n", 2}, {"a", 0.1}},
       {{"min_combined", bat.min_combined}, {"p_min", static_cast<double>(opt)}});
}

void asymptotic_fixtures() {
  const std::vector<double> grid = default_grid();
  const std::vector<double> s4{0.25, 0.5, 0.75, 1.25};
  json t62 = json::array();
  for (double al : {0.3, 0.5})
    for (int n = 1; n <= 8; ++n)
      for (double s : s4)
        t62.push_back({al, n, s, static_cast<double>(block_scalar_psi("ex62", al, 0, n, s))});
  emit("asymptotics_ex62_block_psi", "block scalar sum", {{"columns", {"alpha", "n", "s", "psi_n"}}}, t62);

  json t65 = json::array();
  for (double s : grid) t65.push_back({s, static_cast<double>(ex65_limit(0.3L, 0.6L, s))});
  emit("asymptotics_ex65_limit", "scalar formula", {{"lambda", 0.3}, {"mu", 0.6}, {"columns", {"s", "psi"}}},
       t65);

  json t63 = json::array();
  for (int n = 1; n <= 6; ++n)
    for (double s : grid)
      t63.push_back({n, s, static_cast<double>(block_scalar_psi("remark63", 0.3, 0, n, s))});
  emit("asymptotics_remark63_block_psi", "block scalar sum", {{"alpha", 0.3}, {"columns", {"n", "s", "psi_n"}}},
       t63);

  // Dual route for the subgroup pair at small n.
  for (int n = 1; n <= 3; ++n) {
    Mat r0 = twirl_finite(kron_power(plus_state(), n), finite_power(z2(), n));
    Mat r1 = kron_power(diag2(0.3, 0.7), n);
    for (double s : {0.25, 0.5, 1.5})
      require(std::fabs(psi_dense(r0, r1, s) - static_cast<double>(block_scalar_psi("remark63", 0.3, 0, n, s))) <
                  1e-10,
              "remark63 dense vs block");
  }

  json a4 = json::array();
  for (int n : {200, 400}) {
    a4.push_back({{"a", 0.3}, {"b", 0.7}, {"s", 0.5}, {"n", n},
                  {"finite", static_cast<double>(a4_sum(0.3L, 0.7L, 0.5L, n))},
                  {"limit", static_cast<double>(std::sqrt(0.09L + 0.49L))}});
  }
  emit("asymptotics_a4", "log-sum-exp in long double", json::object(), a4);

  json a5 = json::array();
  for (auto [a, b] : {std::pair{0.8L, 0.2L}, std::pair{0.2L, 0.8L}}) {
    long double lim = a <= b ? a + b : 2 * std::sqrt(a * b);
    a5.push_back({{"a", static_cast<double>(a)}, {"b", static_cast<double>(b)}, {"n", 400},
                  {"finite", static_cast<double>(a5_sum(a, b, 400))}, {"limit", static_cast<double>(lim)}});
  }
  emit("asymptotics_a5", "log-sum-exp in long double", json::object(), a5);

  emit("asymptotics_s_star", "closed form", {{"lambda", 0.2}, {"mu", 0.4}},
       static_cast<double>(std::log(2.0L / 3.0L) / std::log(8.0L / 3.0L)));
  emit("asymptotics_alpha_star", "newton in long double", json::object(),
       static_cast<double>(alpha_star_newton()));

  json big = json::array();
  const int n = 4000;
  for (double s : {0.25, 0.5, 0.75}) {
    long double v = block_scalar_psi("ex61", 0.2, 0.7, n, s) / n;
    long double m = std::max(ex65_limit(0.2L, 0.7L, s), ex65_limit(0.2L, 0.3L, s));
    big.push_back({{"s", s}, {"finite", static_cast<double>(v)}, {"max_formula", static_cast<double>(m)}});
  }
  emit("asymptotics_ex61_large_n", "block scalar sum", {{"lambda", 0.2}, {"mu", 0.7}, {"n", n}}, big);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures OUTDIR\n";
    return 2;
  }
  g_out = argv[1];
  std::filesystem::create_directories(g_out);
  try {
    linalg_fixtures();
    group_fixtures();
    divergence_fixtures();
    test_fixtures();
    asymptotic_fixtures();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
