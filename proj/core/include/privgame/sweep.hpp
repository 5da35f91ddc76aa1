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
// Grid sweeps over the privacy level and their CSV serialization.
#ifndef PRIVGAME_SWEEP_HPP_
#define PRIVGAME_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "privgame/equilibrium.hpp"
#include "privgame/metrics.hpp"
#include "privgame/model.hpp"

namespace privgame {

/// One record per (q, equilibrium kind). Rows with kind "none" keep their
/// numeric cells empty so discontinuities stay visible in the data. The
/// epsilon column is capped at kEpsilonCap with epsilon_capped flagging the
/// q = 1 endpoint.
struct SweepRow {
  double q = 0.0;
  double epsilon = 0.0;
  bool epsilon_capped = false;
  std::string kind = "none";
  std::optional<double> price, cutoff, r1, r0, posterior_gap;
  std::optional<double> cs, profit, adv_utility, mi_bits;
  bool boundary_flag = false;
  bool limit_flag = false;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Classifies every grid point of [q_min, q_max], refines each existence
/// boundary by bisection to a q-resolution of 1e-6 and inserts rows at the
/// refined endpoints. Rows are sorted by q, then kind.
SweepTable run_sweep(const ValueDistribution& dist, const TypeModel& g,
                     const GameParams& params, double q_min = 0.5,
                     double q_max = 1.0, int steps = 513);

/// Fixed-header CSV, '.' decimal separator, 12 significant digits. When
/// `empirics` is given (one entry per row, possibly empty) the oracle
/// columns are appended.
struct SweepEmpirics {
  std::optional<double> r1, r1_se, r0, r0_se, p_sig1, p_sig1_se;
  std::optional<double> cs, cs_se, profit, profit_se, adv, adv_se;
};

std::string sweep_to_csv(const SweepTable& table,
                         const std::vector<SweepEmpirics>* empirics = nullptr);

/// Parses a CSV produced by sweep_to_csv (base columns only).
SweepTable sweep_from_csv(const std::string& text);

}  // namespace privgame

#endif  // PRIVGAME_SWEEP_HPP_
