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
#include "privgame/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {

double purchase_surplus(const ValueDistribution& dist, double price,
                        double cutoff) {
  return integrate(
      [&](double v) { return (v - price) * dist.density(v); }, cutoff, 1.0,
      kQuadratureTol, dist.breakpoints());
}

}  // namespace

double consumer_surplus_ad_component(const EquilibriumPoint& eq,
                                     const ValueDistribution& dist,
                                     const GameParams& params) {
  switch (eq.kind) {
    case EquilibriumKind::kDiscriminatory: {
      const double F = dist.cdf(eq.cutoff);
      return params.delta * (eq.q * (1.0 - F) + (1.0 - eq.q) * F);
    }
    case EquilibriumKind::kUniformA:
      return params.delta;
    case EquilibriumKind::kUniformB:
      return 0.0;
  }
  return 0.0;
}

double consumer_surplus(const EquilibriumPoint& eq,
                        const ValueDistribution& dist,
                        const GameParams& params) {
  return purchase_surplus(dist, eq.price, eq.cutoff) +
         consumer_surplus_ad_component(eq, dist, params);
}

double seller_profit(const EquilibriumPoint& eq,
                     const ValueDistribution& dist) {
  const double cutoff = std::min(1.0, std::max(0.0, eq.cutoff));
  return eq.price * (1.0 - dist.cdf(cutoff));
}

double advertiser_utility(const EquilibriumPoint& eq,
                          const GameParams& params) {
  const PosteriorPair& p = eq.posteriors;
  switch (eq.kind) {
    case EquilibriumKind::kDiscriminatory:
      return p.p_sig1 * (p.r1 * params.s1A + (1.0 - p.r1) * params.s2A) +
             p.p_sig0 * (p.r0 * params.s1B + (1.0 - p.r0) * params.s2B);
    case EquilibriumKind::kUniformA: {
      const double pi = p.p_sig1 * p.r1 + p.p_sig0 * p.r0;  // = prior
      return pi * params.s1A + (1.0 - pi) * params.s2A;
    }
    case EquilibriumKind::kUniformB: {
      const double pi = p.p_sig1 * p.r1 + p.p_sig0 * p.r0;
      return pi * params.s1B + (1.0 - pi) * params.s2B;
    }
  }
  return 0.0;
}

double mutual_information(const ValueDistribution& dist, const TypeModel& g,
                          double v_star, double q) {
  if (q == 0.5) return 0.0;  // output independent of the input bit

  std::vector<double> cuts = dist.breakpoints();
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  const auto gf = [&](double v) { return g(v) * dist.density(v); };
  const auto hf = [&](double v) { return (1.0 - g(v)) * dist.density(v); };
  const double a = integrate(gf, 0.0, v_star, kQuadratureTol, cuts);
  const double b = integrate(gf, v_star, 1.0, kQuadratureTol, cuts);
  const double c = integrate(hf, 0.0, v_star, kQuadratureTol, cuts);
  const double d = integrate(hf, v_star, 1.0, kQuadratureTol, cuts);

  // Joint law of (type, reported bit), normalized so the marginals sum to 1.
  double joint[2][2] = {
      {(1.0 - q) * a + q * b, q * a + (1.0 - q) * b},   // t1, sig=1 / sig=0
      {(1.0 - q) * c + q * d, q * c + (1.0 - q) * d}};  // t2
  const double total = joint[0][0] + joint[0][1] + joint[1][0] + joint[1][1];
  if (!(total > 0.0)) return 0.0;
  for (auto& row : joint) {
    for (double& cell : row) cell /= total;
  }
  const double rows[2] = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
  const double cols[2] = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
  double mi = 0.0;
  for (int t = 0; t < 2; ++t) {
    for (int s = 0; s < 2; ++s) {
      const double p = joint[t][s];
      if (p > 0.0) mi += p * std::log2(p / (rows[t] * cols[s]));
    }
  }
  return std::max(0.0, mi);
}

double cs_derivative(const ValueDistribution& dist, const GameParams& params,
                     double q) {
  const PricingSolution sol = discriminatory_price(dist, params.delta, q);
  if (sol.corner) {
    throw std::domain_error(
        "cs_derivative: corner solution, derivative formula needs an "
        "interior cutoff");
  }
  const double F = dist.cdf(sol.v_star);
  return params.delta * (1.0 - 2.0 * F) - sol.p1_derivative * (1.0 - F);
}

MetricsRow metrics_for(const EquilibriumPoint& eq,
                       const ValueDistribution& dist, const TypeModel& g,
                       const GameParams& params) {
  MetricsRow row;
  row.consumer_surplus = consumer_surplus(eq, dist, params);
  row.cs_ad_component = consumer_surplus_ad_component(eq, dist, params);
  row.seller_profit = seller_profit(eq, dist);
  row.advertiser_utility = advertiser_utility(eq, params);
  row.mi_bits = mutual_information(dist, g, eq.cutoff, eq.q);
  row.posterior_gap = eq.posteriors.r1 - eq.posteriors.r0;
  if (eq.kind == EquilibriumKind::kDiscriminatory && !eq.corner) {
    row.cs_derivative = cs_derivative(dist, params, eq.q);
  }
  return row;
}

}  // namespace privgame
