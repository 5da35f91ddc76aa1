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
// Subcommand entry points shared by the CLI binary and the tests.
// Exit codes: 0 success, 2 invalid input, 3 no equilibrium (solve only);
// verify returns 1 when a property fails.
#ifndef PRIVGAME_COMMANDS_HPP_
#define PRIVGAME_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>

#include "privgame/config.hpp"

namespace privgame {

/// Classifies the game at one privacy level and prints every equilibrium
/// with its metrics. When `write_csv` is set, appends the rows to
/// out_dir/solve.csv.
int cmd_solve(const RunConfig& config, double q, bool write_csv,
              std::ostream& out, std::ostream& err);

/// Sweeps the configured q grid, writes out_dir/sweep.csv and, when
/// `emit_svg` is set, the per-figure SVG files.
int cmd_sweep(const RunConfig& config, bool emit_svg, std::ostream& out,
              std::ostream& err);

/// Runs the property suite and prints one PASS/FAIL line per property.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Sweeps the grid and simulates each classified equilibrium profile with n
/// consumers per point; writes out_dir/simulate.csv with empirical columns.
int cmd_simulate(const RunConfig& config, long long n, std::uint64_t seed,
                 std::ostream& out, std::ostream& err);

}  // namespace privgame

#endif  // PRIVGAME_COMMANDS_HPP_
