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
#include "privgame/pricing.hpp"

#include <cmath>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {

// dI/dv by finite differences, one-sided near the support edges.
double inverse_hazard_slope(const ValueDistribution& dist, double v) {
  const double h = 1e-6;
  if (v < h) {
    return (dist.inverse_hazard(v + h) - dist.inverse_hazard(v)) / h;
  }
  if (v > 1.0 - h) {
    return (dist.inverse_hazard(v) - dist.inverse_hazard(v - h)) / h;
  }
  return (dist.inverse_hazard(v + h) - dist.inverse_hazard(v - h)) /
         (2.0 * h);
}

double foc_slope(const ValueDistribution& dist, double delta, double v_star) {
  const double ip = inverse_hazard_slope(dist, v_star);
  return 2.0 * delta * ip / (ip - 1.0);
}

}  // namespace

double monopoly_price(const ValueDistribution& dist) {
  const auto foc = [&](double p) {
    const double ih = dist.inverse_hazard(p);
    if (std::isinf(ih)) return -ih;  // -inf at a vanishing-density edge
    return p - ih;
  };
  const double f0 = foc(0.0);
  const double f1 = foc(1.0);
  if (!(f0 < 0.0) || !(f1 > 0.0)) {
    throw std::runtime_error(
        "monopoly_price: p - I(p) has no sign change on (0,1); "
        "model rejected");
  }
  return bisect(foc, 0.0, 1.0, kRootTol);
}

PricingSolution discriminatory_price(const ValueDistribution& dist,
                                     double delta, double q) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("discriminatory_price: delta must be > 0");
  }
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("discriminatory_price: q must lie in [1/2,1]");
  }
  PricingSolution sol;
  sol.p_m = monopoly_price(dist);

  const double shift = (1.0 - 2.0 * q) * delta;  // <= 0
  // Root-find in cutoff space: phi(v) = (v - shift) - I(v) is strictly
  // increasing (I non-increasing), so the root is unique when bracketed.
  const auto phi = [&](double v) {
    const double ih = dist.inverse_hazard(v);
    if (std::isinf(ih)) return -ih;
    return (v - shift) - ih;
  };

  const double phi0 = phi(0.0);
  if (phi0 >= 0.0) {
    // Interior cutoff would be negative: everyone buys. Profit is increasing
    // in p on the all-buy region, so price rises to the boundary.
    sol.v_star = 0.0;
    sol.p1 = -shift;
    sol.corner = phi0 > 0.0;
    sol.p1_derivative = sol.corner ? 2.0 * delta : foc_slope(dist, delta, 0.0);
    return sol;
  }
  if (!(phi(1.0) > 0.0)) {
    throw std::runtime_error(
        "discriminatory_price: FOC has no sign change on the cutoff bracket");
  }
  sol.v_star = bisect(phi, 0.0, 1.0, kRootTol);
  sol.p1 = sol.v_star - shift;
  sol.corner = false;
  sol.p1_derivative = foc_slope(dist, delta, sol.v_star);
  return sol;
}

}  // namespace privgame
