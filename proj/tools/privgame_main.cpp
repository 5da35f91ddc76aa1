// Copyright 2026 The Privgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// CLI front end: solve, sweep, verify and simulate subcommands over a
// key=value game config.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "privgame/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"equilibrium solver for the privacy-constrained targeted-"
               "advertising game"};
  app.require_subcommand(1);

  std::string config_path;
  double q = 0.75;
  bool solve_csv = false;
  bool svg = false;
  long long n = 1000000;
  std::uint64_t seed = 1;

  CLI::App* solve = app.add_subcommand(
      "solve", "classify the equilibria at one privacy level");
  solve->add_option("--config", config_path, "game config file")->required();
  solve->add_option("--q", q, "channel fidelity in [1/2,1]")->required();
  solve->add_flag("--csv", solve_csv, "also append rows to out_dir/solve.csv");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "sweep the q grid and write out_dir/sweep.csv");
  sweep->add_option("--config", config_path, "game config file")->required();
  sweep->add_flag("--svg", svg, "emit the figure SVGs");

  CLI::App* verify =
      app.add_subcommand("verify", "run the property suite on the game");
  verify->add_option("--config", config_path, "game config file")->required();

  CLI::App* simulate = app.add_subcommand(
      "simulate", "sweep and cross-check each point against the Monte-Carlo "
                  "oracle");
  simulate->add_option("--config", config_path, "game config file")->required();
  simulate->add_option("--n", n, "consumers per grid point");
  simulate->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  privgame::RunConfig config;
  try {
    config = privgame::parse_config_file(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) {
      return privgame::cmd_solve(config, q, solve_csv, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
      return privgame::cmd_sweep(config, svg, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      return privgame::cmd_verify(config, std::cout, std::cerr);
    }
    if (simulate->parsed()) {
      return privgame::cmd_simulate(config, n, seed, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
