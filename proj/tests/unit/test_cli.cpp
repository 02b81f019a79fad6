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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symtest/cli.hpp"
#include "symtest/error.hpp"
#include "symtest/scenario_io.hpp"
#include "symtest/table.hpp"

using namespace symtest;

namespace {

std::string scenario_path(const std::string& name) {
  return std::string(SYMTEST_SCENARIO_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("symtest_unit_" + name);
  std::ofstream(p) << text;
  return p.string();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

const char* kEx62 = R"({
  "name": "ex62",
  "dim": 2,
  "rho0": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]],
  "rho1": "diag 0.3",
  "group": {"type": "torus", "weights": [0, 1]},
  "n_max": 3,
  "params": {"alpha": 0.3},
  "kind": "TorusPureVsMixed"
})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("scenario round trip") {
    Scenario a = parse_scenario(kEx62);
    std::string once = serialize_scenario(a);
    Scenario b = parse_scenario(once);
    CHECK(serialize_scenario(b) == once);
    CHECK(max_abs_diff(a.rho0.matrix(), b.rho0.matrix()) == 0.0);
    CHECK(max_abs_diff(a.rho1.matrix(), b.rho1.matrix()) == 0.0);
    CHECK(b.action.weights() == std::vector<long>{0, 1});
    CHECK(b.kind == ScenarioKind::TorusPureVsMixed);
    CHECK(b.params.at("alpha") == 0.3);
    for (const char* f : {"ex61.json", "ex62.json", "ex65.json", "remark63.json", "qutrit_clock.json"}) {
      Scenario s = load_scenario(scenario_path(f));
      CHECK(serialize_scenario(parse_scenario(serialize_scenario(s))) == serialize_scenario(s));
    }
  }

  TEST_CASE("named constructors") {
    const double l = 0.2;
    ComplexMatrix s = construct_state("bernoulli-conjugated 0.2");
    CHECK(std::abs(s(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(s(0, 1) - (l - 0.5)) < 1e-15);
    CHECK(std::abs(s(1, 0) - (l - 0.5)) < 1e-15);
    CHECK(std::abs(s.trace() - 1.0) < 1e-15);
    Spectrum sp = eig(HermitianOperator(s));
    CHECK(sp.eigenvalues(0) == doctest::Approx(l));
    CHECK(sp.eigenvalues(1) == doctest::Approx(1 - l));
    CHECK_THROWS_AS(construct_state("gaussian 0.2"), ParseError);
    CHECK_THROWS_AS(construct_state("diag"), ParseError);
  }

  TEST_CASE("validation errors") {
    std::string bad_trace = kEx62;
    bad_trace.replace(bad_trace.find("\"diag 0.3\""), 10, "[[0.5, 0], [0, 0.4]]");
    try {
      parse_scenario(bad_trace);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("trace") != std::string::npos);
      CHECK(std::string(e.what()).find("rho1") != std::string::npos);
    }
    std::string bad_dim = kEx62;
    bad_dim.replace(bad_dim.find("\"dim\": 2"), 8, "\"dim\": 3");
    CHECK_THROWS_AS(parse_scenario(bad_dim), DimensionError);
    std::string extra = kEx62;
    extra.replace(extra.find("\"n_max\""), 7, "\"nmax\"");
    CHECK_THROWS_AS(parse_scenario(extra), ParseError);
  }

  TEST_CASE("malformed file gives exit 2 with a position") {
    std::string path = write_temp("malformed.json", "{\n  \"name\": \"x\",\n  \"dim\": 2,,\n}\n");
    RunConfig cfg;
    cfg.scenario_path = path;
    cfg.command = "psi";
    auto o = run_cli(cfg);
    CHECK(o.code == kExitParse);
    CHECK(o.err.find("line 3") != std::string::npos);
    CHECK(o.err.find("column") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    RunConfig cfg;
    cfg.command = "psi";
    cfg.scenario_path = "/nonexistent/scenario.json";
    CHECK(run_cli(cfg).code == kExitParse);

    cfg.scenario_path = write_temp("ex62.json", kEx62);
    cfg.s_grid = "1:0:5";
    CHECK(run_cli(cfg).code == kExitParse);
    cfg.s_grid = "";
    cfg.format = "xml";
    CHECK(run_cli(cfg).code == kExitParse);
    cfg.format = "csv";

    cfg.n_max = 40;
    CHECK(run_cli(cfg).code == kExitDimension);
    cfg.n_max = 0;

    cfg.command = "verify";
    auto v = run_cli(cfg);
    CHECK(v.code == kExitOk);
    CHECK(v.err.find("PASS") != std::string::npos);
  }

  TEST_CASE("psi table output") {
    RunConfig cfg;
    cfg.command = "psi";
    cfg.scenario_path = write_temp("ex62.json", kEx62);
    cfg.s_grid = "0:1:3";
    auto o = run_cli(cfg);
    REQUIRE(o.code == kExitOk);
    std::istringstream is(o.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "s,value,n,label");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == 3 * 3 + 3);

    cfg.format = "json";
    auto j = run_cli(cfg);
    REQUIRE(j.code == kExitOk);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.size() == 12);
    CHECK(doc[0].contains("value"));
  }

  TEST_CASE("every table command runs") {
    for (const std::string cmd : {"chernoff", "hoeffding", "stein", "pmin", "beta-eps", "convergence"}) {
      RunConfig cfg;
      cfg.command = cmd;
      cfg.scenario_path = write_temp("ex62.json", kEx62);
      auto o = run_cli(cfg);
      INFO(cmd << ": " << o.err);
      CHECK(o.code == kExitOk);
      CHECK(o.out.size() > 10);
    }
  }

  TEST_CASE("examples command") {
    RunConfig cfg;
    cfg.command = "examples";
    cfg.name = "remark64";
    auto o = run_cli(cfg);
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("0.110027") != std::string::npos);
    cfg.name = "ex99";
    CHECK(run_cli(cfg).code == kExitParse);
  }

  TEST_CASE("tables") {
    Table t{{"a", "b"}, {}};
    t.add({1.0, std::string("x,y")});
    t.add({std::numeric_limits<double>::infinity(), 3LL});
    CHECK_THROWS(t.add({1.0}));
    std::ostringstream csv;
    write_csv(t, csv);
    CHECK(csv.str() == "a,b\n1,\"x,y\"\ninf,3\n");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(M_PI)) == M_PI);
    std::ostringstream js;
    write_json(t, js);
    auto doc = nlohmann::json::parse(js.str());
    CHECK(doc[1]["a"] == "inf");
    std::ostringstream bad;
    CHECK_THROWS_AS(write_table(t, "yaml", bad), ParseError);
  }
}
