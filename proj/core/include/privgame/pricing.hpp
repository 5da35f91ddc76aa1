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
// The seller's period-1 problem: the myopic monopoly price, and the
// price/cutoff pair that maximizes profit against forward-looking consumers
// under discriminatory advertising.
#ifndef PRIVGAME_PRICING_HPP_
#define PRIVGAME_PRICING_HPP_

#include "privgame/model.hpp"

namespace privgame {

struct PricingSolution {
  double p_m = 0.0;     // myopic monopoly price
  double p1 = 0.0;      // discriminatory price (may exceed 1)
  double v_star = 0.0;  // purchase cutoff, v_star = p1 + (1-2q)*delta
  bool corner = false;  // cutoff clamped to 0 (all consumers buy)
  double p1_derivative = 0.0;  // d p1 / d q at the solution
};

/// Unique root in (0,1) of p - I(p) = 0 by bracketed bisection; uniqueness
/// comes from the non-decreasing hazard. Throws std::runtime_error when the
/// bracket has no sign change (model rejected).
double monopoly_price(const ValueDistribution& dist);

/// Solves p1 - I(p1 + (1-2q)*delta) = 0 on the cutoff bracket [0,1]. When
/// the interior cutoff would be negative the seller sells to everyone at the
/// highest all-buy price p1 = (2q-1)*delta, reported with corner set.
/// p1_derivative is 2*delta*I'/(I'-1) at the cutoff (I' by central finite
/// difference, h=1e-6); a corner solution has slope 2*delta.
PricingSolution discriminatory_price(const ValueDistribution& dist,
                                     double delta, double q);

}  // namespace privgame

#endif  // PRIVGAME_PRICING_HPP_
