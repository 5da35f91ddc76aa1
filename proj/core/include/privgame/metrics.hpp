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
// Welfare and information quantities at an equilibrium point.
#ifndef PRIVGAME_METRICS_HPP_
#define PRIVGAME_METRICS_HPP_

#include <optional>

#include "privgame/equilibrium.hpp"
#include "privgame/model.hpp"

namespace privgame {

struct MetricsRow {
  double consumer_surplus = 0.0;
  // The period-2 part of consumer surplus: the delta-weighted probability of
  // seeing ad A. Reported separately because it moves against the purchase
  // surplus as q varies (it is maximized at q=1 while the total need not be).
  double cs_ad_component = 0.0;
  double seller_profit = 0.0;
  double advertiser_utility = 0.0;
  double mi_bits = 0.0;
  double posterior_gap = 0.0;
  // Defined for interior discriminatory points only.
  std::optional<double> cs_derivative;
};

/// Expected period-1 purchase surplus plus the delta-weighted probability of
/// seeing ad A under the equilibrium's ad rule.
double consumer_surplus(const EquilibriumPoint& eq,
                        const ValueDistribution& dist,
                        const GameParams& params);

/// Only the period-2 term of consumer surplus (delta times the probability
/// of ad A).
double consumer_surplus_ad_component(const EquilibriumPoint& eq,
                                     const ValueDistribution& dist,
                                     const GameParams& params);

/// price * (1 - F(cutoff)).
double seller_profit(const EquilibriumPoint& eq, const ValueDistribution& dist);

/// Ex-ante advertiser payoff. Uniform kinds reduce to the prior-weighted
/// payoff of the fixed ad; the discriminatory kind mixes over both signals
/// with the posterior payoffs.
double advertiser_utility(const EquilibriumPoint& eq, const GameParams& params);

/// Mutual information, in bits, between the consumer's type and the noisy
/// purchase bit when the cutoff is v_star. Exactly 0 at q = 1/2 (the channel
/// output is independent of everything) and 0 when the purchase bit is
/// degenerate.
double mutual_information(const ValueDistribution& dist, const TypeModel& g,
                          double v_star, double q);

/// d(consumer surplus)/dq along the discriminatory path:
///   delta*(1 - 2F(v*)) - p1'(q)*(1 - F(v*)).
/// Throws std::domain_error at corner solutions.
double cs_derivative(const ValueDistribution& dist, const GameParams& params,
                     double q);

/// Assembles the full metrics row for a classified equilibrium point.
MetricsRow metrics_for(const EquilibriumPoint& eq, const ValueDistribution& dist,
                       const TypeModel& g, const GameParams& params);

}  // namespace privgame

#endif  // PRIVGAME_METRICS_HPP_
