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

#include <iostream>

#include <CLI11.hpp>

#include "symtest/cli.hpp"

int main(int argc, char** argv) {
  symtest::RunConfig cfg;
  CLI::App app{"symtest: hypothesis testing under group symmetry"};
  app.add_option("--scenario", cfg.scenario_path, "scenario JSON file");
  app.add_option("--command", cfg.command, "command to run")
      ->required()
      ->check(CLI::IsMember(symtest::command_names()));
  app.add_option("--n-max", cfg.n_max, "override the scenario n_max")->check(CLI::PositiveNumber);
  app.add_option("--s-grid", cfg.s_grid, "s grid as a:b:points");
  app.add_option("--r-grid", cfg.r_grid, "r grid as a:b:points");
  app.add_option("--a-grid", cfg.a_grid, "a grid as a:b:points");
  app.add_option("--eps", cfg.eps, "type I error levels in (0,1)");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--name", cfg.name, "example name for --command examples");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : symtest::kExitParse;
  }
  return symtest::run(cfg, std::cout, std::cerr);
}
