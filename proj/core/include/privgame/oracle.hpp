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
// Seeded Monte-Carlo simulation of the literal game: sampled consumers, the
// randomized-response channel, and an advertiser playing a fixed rule. Used
// as an independent check of every analytic quantity.
#ifndef PRIVGAME_ORACLE_HPP_
#define PRIVGAME_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "privgame/equilibrium.hpp"
#include "privgame/model.hpp"

namespace privgame {

/// Fixed strategy profile to simulate: posted price, purchase cutoff, and
/// the advertiser's signal-to-ad rule.
struct StrategyProfile {
  double price;
  double cutoff;
  AdvertiserStrategy ad_rule;

  static StrategyProfile from_equilibrium(const EquilibriumPoint& eq) {
    AdvertiserStrategy rule = AdvertiserStrategy::kDiscriminate;
    if (eq.kind == EquilibriumKind::kUniformA) rule = AdvertiserStrategy::kAlwaysA;
    if (eq.kind == EquilibriumKind::kUniformB) rule = AdvertiserStrategy::kAlwaysB;
    return {eq.price, eq.cutoff, rule};
  }
};

/// Empirical estimates with standard errors. Conditional frequencies whose
/// conditioning event never occurred are NaN with a zero sample count.
struct SimReport {
  long long n = 0;
  std::uint64_t seed = 0;
  double q = 0.0;

  double r1 = 0.0, r1_se = 0.0;
  double r0 = 0.0, r0_se = 0.0;
  double p_sig1 = 0.0, p_sig1_se = 0.0;
  double consumer_surplus = 0.0, consumer_surplus_se = 0.0;
  double seller_profit = 0.0, seller_profit_se = 0.0;
  double advertiser_utility = 0.0, advertiser_utility_se = 0.0;
  double mi_bits = 0.0, mi_bits_se = 0.0;

  long long n_sig1 = 0;
  long long n_sig0 = 0;
  long long n_buy = 0;
};

/// Simulates n consumers through the two-period protocol: v ~ F by
/// inverse-CDF bisection, purchase iff v >= cutoff, the purchase bit flipped
/// with probability 1-q, type t1 with probability g(v), ad per rule.
/// Deterministic given (seed, n, model): draws use a counter-based generator
/// so shard order and thread count never change the report.
SimReport simulate(const ValueDistribution& dist, const TypeModel& g,
                   const GameParams& params, double q,
                   const StrategyProfile& profile, long long n,
                   std::uint64_t seed);

/// One report per sample count in `ns` (ascending), all from the same seed.
std::vector<SimReport> convergence_sweep(const ValueDistribution& dist,
                                         const TypeModel& g,
                                         const GameParams& params, double q,
                                         const StrategyProfile& profile,
                                         const std::vector<long long>& ns,
                                         std::uint64_t seed);

}  // namespace privgame

#endif  // PRIVGAME_ORACLE_HPP_
