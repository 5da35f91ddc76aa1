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
// The property suite behind the `verify` subcommand: monotonicity,
// ordering, optimality, coexistence and oracle-agreement checks evaluated
// on a concrete game.
#ifndef PRIVGAME_VERIFY_HPP_
#define PRIVGAME_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "privgame/model.hpp"

namespace privgame {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // offending point or a short note (e.g. "vacuous")
};

struct VerifyOptions {
  int q_grid = 101;
  long long oracle_n = 200000;
  std::uint64_t oracle_seed = 0x5eed5eedULL;
  bool include_oracle = true;
};

/// Runs every property check against the game. The model must validate
/// first; callers should handle that separately (the CLI exits 2).
std::vector<PropertyResult> run_property_suite(const ValueDistribution& dist,
                                               const TypeModel& g,
                                               const GameParams& params,
                                               const VerifyOptions& opts = {});

}  // namespace privgame

#endif  // PRIVGAME_VERIFY_HPP_
