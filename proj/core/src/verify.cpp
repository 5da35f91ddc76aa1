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
#include "privgame/verify.hpp"

#include <cmath>
#include <sstream>

#include "privgame/equilibrium.hpp"
#include "privgame/metrics.hpp"
#include "privgame/oracle.hpp"
#include "privgame/posterior.hpp"
#include "privgame/pricing.hpp"

namespace privgame {

namespace {

std::string at_q(double q, const std::string& what) {
  std::ostringstream out;
  out << what << " at q=" << q;
  return out.str();
}

struct Suite {
  const ValueDistribution& dist;
  const TypeModel& g;
  const GameParams& params;
  const VerifyOptions& opts;
  std::vector<PropertyResult> results;

  std::vector<double> q_grid() const {
    std::vector<double> qs(opts.q_grid);
    for (int i = 0; i < opts.q_grid; ++i) {
      qs[i] = 0.5 + 0.5 * static_cast<double>(i) / (opts.q_grid - 1);
    }
    return qs;
  }

  void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, pass && detail.empty() ? "" : detail});
  }

  void posterior_monotone_in_q() {
    const double p_m = monopoly_price(dist);
    for (double v_star : {0.25, p_m, 0.75}) {
      double prev_r1 = -1.0, prev_r0 = 2.0;
      for (double q : q_grid()) {
        const PosteriorPair p = posterior(dist, g, v_star, q);
        if (p.r1 < prev_r1 - 1e-10 || p.r0 > prev_r0 + 1e-10) {
          record("posterior_monotone_in_q", false,
                 at_q(q, "monotonicity breaks with v*=" +
                             std::to_string(v_star)));
          return;
        }
        prev_r1 = p.r1;
        prev_r0 = p.r0;
      }
    }
    record("posterior_monotone_in_q", true, "");
  }

  void posterior_reflection() {
    for (double v_star : {0.1, 0.5, 0.9}) {
      for (int i = 0; i <= 40; ++i) {
        const double q = static_cast<double>(i) / 40.0;
        const double r0 = posterior(dist, g, v_star, q).r0;
        const double r1_mirror = posterior(dist, g, v_star, 1.0 - q).r1;
        if (std::abs(r0 - r1_mirror) > 1e-10) {
          record("posterior_reflection", false,
                 at_q(q, "r0(q) != r1(1-q), diff=" +
                             std::to_string(r0 - r1_mirror)));
          return;
        }
      }
    }
    record("posterior_reflection", true, "");
  }

  void posterior_gap_nonnegative() {
    for (double v_star : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double q : q_grid()) {
        if (posterior_gap(dist, g, v_star, q) < -1e-12) {
          record("posterior_gap_nonnegative", false,
                 at_q(q, "r1 < r0 with v*=" + std::to_string(v_star)));
          return;
        }
      }
    }
    record("posterior_gap_nonnegative", true, "");
  }

  void posterior_total_probability() {
    const double prior = prior_t1(dist, g);
    for (double v_star : {0.2, 0.5, 0.8}) {
      for (double q : q_grid()) {
        const PosteriorPair p = posterior(dist, g, v_star, q);
        const double mixed = p.p_sig1 * p.r1 + p.p_sig0 * p.r0;
        if (std::abs(mixed - prior) > 1e-10) {
          record("posterior_total_probability", false,
                 at_q(q, "law of total probability off by " +
                             std::to_string(mixed - prior)));
          return;
        }
      }
    }
    record("posterior_total_probability", true, "");
  }

  void posterior_quadrature_stable() {
    for (double v_star : {0.3, 0.7}) {
      for (double q : {0.6, 0.9}) {
        const PosteriorPair coarse =
            posterior(dist, g, v_star, q, kQuadratureTol);
        const PosteriorPair fine =
            posterior(dist, g, v_star, q, 0.5 * kQuadratureTol);
        if (std::abs(coarse.r1 - fine.r1) > 1e-9 ||
            std::abs(coarse.r0 - fine.r0) > 1e-9) {
          record("posterior_quadrature_stable", false,
                 at_q(q, "tolerance halving moved a posterior"));
          return;
        }
      }
    }
    record("posterior_quadrature_stable", true, "");
  }

  void pricing_monotone() {
    double prev_p1 = -1e300, prev_vs = 1e300;
    for (double q : q_grid()) {
      const PricingSolution sol = discriminatory_price(dist, params.delta, q);
      if (sol.p1 < prev_p1 - 1e-9 || sol.v_star > prev_vs + 1e-9) {
        record("pricing_monotone", false, at_q(q, "p1/v* monotonicity"));
        return;
      }
      prev_p1 = sol.p1;
      prev_vs = sol.v_star;
    }
    record("pricing_monotone", true, "");
  }

  void pricing_ordering() {
    const double p_m = monopoly_price(dist);
    for (double q : q_grid()) {
      const PricingSolution sol = discriminatory_price(dist, params.delta, q);
      if (sol.v_star > p_m + 1e-9 || sol.p1 < p_m - 1e-9) {
        record("pricing_ordering", false, at_q(q, "v* <= p_M <= p1 fails"));
        return;
      }
    }
    record("pricing_ordering", true, "");
  }

  void pricing_revenue_optimal() {
    for (double q : {0.6, 0.75, 0.9, 1.0}) {
      const PricingSolution sol = discriminatory_price(dist, params.delta, q);
      const double shift = (1.0 - 2.0 * q) * params.delta;
      const auto profit = [&](double p) {
        const double cutoff = std::min(1.0, std::max(0.0, p + shift));
        return p * (1.0 - dist.cdf(cutoff));
      };
      const double p_hi = 1.0 - shift;
      double best = 0.0;
      const int kGrid = 100000;
      for (int i = 0; i <= kGrid; ++i) {
        best = std::max(best, profit(p_hi * i / kGrid));
      }
      if (profit(sol.p1) < best - 1e-6) {
        record("pricing_revenue_optimal", false,
               at_q(q, "brute-force grid beats the FOC solution by " +
                           std::to_string(best - profit(sol.p1))));
        return;
      }
    }
    record("pricing_revenue_optimal", true, "");
  }

  void pricing_derivative_consistent() {
    const double h = 1e-5;
    for (double q : {0.6, 0.75, 0.9}) {
      const PricingSolution sol = discriminatory_price(dist, params.delta, q);
      const double fd = (discriminatory_price(dist, params.delta, q + h).p1 -
                         discriminatory_price(dist, params.delta, q - h).p1) /
                        (2.0 * h);
      if (std::abs(sol.p1_derivative - fd) > 1e-5 * std::max(1.0, std::abs(fd))) {
        record("pricing_derivative_consistent", false,
               at_q(q, "implicit-function slope " +
                           std::to_string(sol.p1_derivative) + " vs FD " +
                           std::to_string(fd)));
        return;
      }
    }
    record("pricing_derivative_consistent", true, "");
  }

  void cutoff_certificates() {
    for (AdvertiserStrategy s :
         {AdvertiserStrategy::kDiscriminate, AdvertiserStrategy::kAlwaysA,
          AdvertiserStrategy::kAlwaysB}) {
      for (double price : {0.25, 0.5, 0.9}) {
        for (double q : {0.5, 0.75, 1.0}) {
          const CutoffResponse r = best_response_cutoff(params, s, price, q);
          if (!r.upper_interval_certified) {
            record("cutoff_certificates", false,
                   at_q(q, std::string("buy set not an upper interval for ") +
                               to_string(s)));
            return;
          }
        }
      }
    }
    record("cutoff_certificates", true, "");
  }

  void uniform_kinds_exclusive() {
    const auto at_half = classify(dist, g, params, 0.5);
    int uniforms = 0;
    bool disc = false;
    for (const auto& pt : at_half) {
      if (pt.kind == EquilibriumKind::kDiscriminatory) disc = true;
      else ++uniforms;
    }
    if (disc || uniforms != 1) {
      record("uniform_kinds_exclusive", false,
             "q=1/2 should yield exactly one uniform kind");
      return;
    }
    for (double q : q_grid()) {
      bool a = false, b = false;
      for (const auto& pt : classify(dist, g, params, q)) {
        a = a || pt.kind == EquilibriumKind::kUniformA;
        b = b || pt.kind == EquilibriumKind::kUniformB;
      }
      if (a && b) {
        record("uniform_kinds_exclusive", false,
               at_q(q, "both uniform kinds classified"));
        return;
      }
    }
    record("uniform_kinds_exclusive", true, "");
  }

  void uniform_interval_matches_boundary() {
    const double prior = prior_t1(dist, g);
    const double eta = params.eta();
    if (std::abs(prior - eta) <= kEtaTieTol) {
      record("uniform_interval_matches_boundary", true,
             "vacuous: prior ties with eta");
      return;
    }
    const EquilibriumKind kind = prior > eta ? EquilibriumKind::kUniformA
                                             : EquilibriumKind::kUniformB;
    const ExistenceBoundary boundary = uniform_boundary(dist, g, params, kind);
    const double step = 0.5 / (opts.q_grid - 1);
    for (double q : q_grid()) {
      bool present = false;
      for (const auto& pt : classify(dist, g, params, q)) {
        present = present || pt.kind == kind;
      }
      const bool expected =
          boundary.entire_interval || q <= boundary.q_bar + step;
      if (present && !expected) {
        record("uniform_interval_matches_boundary", false,
               at_q(q, "uniform kind exists beyond its boundary"));
        return;
      }
      if (!present && q < boundary.q_bar - step && !boundary.entire_interval) {
        record("uniform_interval_matches_boundary", false,
               at_q(q, "uniform kind missing inside its interval"));
        return;
      }
      if (!present && boundary.entire_interval) {
        record("uniform_interval_matches_boundary", false,
               at_q(q, "uniform kind missing despite entire-interval result"));
        return;
      }
    }
    record("uniform_interval_matches_boundary", true, "");
  }

  void classified_points_self_check() {
    const double eta = params.eta();
    for (double q : q_grid()) {
      for (const auto& pt : classify(dist, g, params, q)) {
        const PosteriorPair again = posterior(dist, g, pt.cutoff, q);
        const PosteriorPair& stored = pt.posteriors;
        const double tol = stored.limit_flag ? 5e-6 : 1e-9;
        if (std::abs(again.p_sig1 - stored.p_sig1) > 1e-9 ||
            (!stored.limit_flag &&
             (std::abs(again.r1 - stored.r1) > tol ||
              std::abs(again.r0 - stored.r0) > tol))) {
          record("classified_points_self_check", false,
                 at_q(q, "recomputed posteriors disagree"));
          return;
        }
        bool ok = true;
        switch (pt.kind) {
          case EquilibriumKind::kDiscriminatory:
            ok = stored.r1 >= eta - 2 * kEtaTieTol &&
                 stored.r0 <= eta + 2 * kEtaTieTol;
            break;
          case EquilibriumKind::kUniformA:
            ok = stored.r1 >= eta - 2 * kEtaTieTol &&
                 stored.r0 >= eta - 2 * kEtaTieTol;
            break;
          case EquilibriumKind::kUniformB:
            ok = stored.r1 <= eta + 2 * kEtaTieTol &&
                 stored.r0 <= eta + 2 * kEtaTieTol;
            break;
        }
        if (!ok) {
          record("classified_points_self_check", false,
                 at_q(q, "stored conditions do not hold"));
          return;
        }
      }
    }
    record("classified_points_self_check", true, "");
  }

  void coexistence_orderings() {
    bool saw_coexistence = false;
    for (double q : q_grid()) {
      const auto points = classify(dist, g, params, q);
      const EquilibriumPoint* disc = nullptr;
      const EquilibriumPoint* uniform = nullptr;
      for (const auto& pt : points) {
        if (pt.kind == EquilibriumKind::kDiscriminatory) disc = &pt;
        else uniform = &pt;
      }
      if (!disc || !uniform) continue;
      saw_coexistence = true;

      const MetricsRow md = metrics_for(*disc, dist, g, params);
      const MetricsRow mu = metrics_for(*uniform, dist, g, params);
      if (uniform->kind == EquilibriumKind::kUniformA) {
        if (!(mu.consumer_surplus > md.consumer_surplus) ||
            !(md.seller_profit > mu.seller_profit)) {
          record("coexistence_orderings", false,
                 at_q(q, "uniform-A coexistence ordering fails"));
          return;
        }
        // Every consumer value prefers the uniform-A outcome.
        for (int i = 0; i <= 100; ++i) {
          const double v = static_cast<double>(i) / 100.0;
          const double u_uniform =
              std::max(v - uniform->price, 0.0) + params.delta;
          const double u_disc =
              std::max(v - disc->price + disc->q * params.delta,
                       (1.0 - disc->q) * params.delta);
          if (!(u_uniform > u_disc - 1e-12)) {
            record("coexistence_orderings", false,
                   at_q(q, "a consumer value prefers discrimination to "
                           "uniform A"));
            return;
          }
        }
      } else {
        if (md.consumer_surplus < mu.consumer_surplus - 1e-12) {
          record("coexistence_orderings", false,
                 at_q(q, "uniform-B coexistence: discriminatory CS lower"));
          return;
        }
      }
      const double adv_d = md.advertiser_utility;
      const double adv_u = mu.advertiser_utility;
      if (adv_d < adv_u - 1e-12) {
        record("coexistence_orderings", false,
               at_q(q, "advertiser prefers the uniform equilibrium"));
        return;
      }
    }
    record("coexistence_orderings", true,
           saw_coexistence ? "" : "vacuous: no coexistence on the grid");
  }

  void mutual_information_bounds() {
    const double p_m = monopoly_price(dist);
    if (mutual_information(dist, g, p_m, 0.5) != 0.0) {
      record("mutual_information_bounds", false, "nonzero at q=1/2");
      return;
    }
    for (double q : q_grid()) {
      const PricingSolution sol = discriminatory_price(dist, params.delta, q);
      const double mi = mutual_information(dist, g, sol.v_star, q);
      const PosteriorPair p = posterior(dist, g, sol.v_star, q);
      const auto h2 = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
      };
      if (mi < 0.0 || mi > h2(p.p_sig1) + 1e-9) {
        record("mutual_information_bounds", false,
               at_q(q, "mi outside [0, H2(p_sig1)]"));
        return;
      }
    }
    record("mutual_information_bounds", true, "");
  }

  void cs_derivative_matches_fd() {
    const double h = 1e-4;
    bool any = false;
    for (int i = 0; i < 21; ++i) {
      const double q = 0.52 + (0.98 - 0.52) * i / 20.0;
      double analytic;
      try {
        analytic = cs_derivative(dist, params, q);
      } catch (const std::domain_error&) {
        continue;  // corner at this q
      }
      any = true;
      const auto cs_at = [&](double qq) {
        const EquilibriumPoint pt = candidate_point(
            dist, g, params, EquilibriumKind::kDiscriminatory, qq);
        return consumer_surplus(pt, dist, params);
      };
      const double fd = (cs_at(q + h) - cs_at(q - h)) / (2.0 * h);
      if (std::abs(analytic - fd) > 1e-6) {
        record("cs_derivative_matches_fd", false,
               at_q(q, "formula " + std::to_string(analytic) + " vs FD " +
                           std::to_string(fd)));
        return;
      }
    }
    record("cs_derivative_matches_fd", true,
           any ? "" : "vacuous: all sampled q are corner solutions");
  }

  void oracle_agreement() {
    for (double q : {0.6, 0.9}) {
      const auto points = classify(dist, g, params, q);
      const EquilibriumPoint pt =
          points.empty() ? candidate_point(dist, g, params,
                                           EquilibriumKind::kDiscriminatory, q)
                         : points.front();
      const StrategyProfile profile = StrategyProfile::from_equilibrium(pt);
      const SimReport sim = simulate(dist, g, params, q, profile,
                                     opts.oracle_n, opts.oracle_seed);
      const MetricsRow m = metrics_for(pt, dist, g, params);
      const auto within = [](double analytic, double emp, double se) {
        if (std::isnan(emp)) return true;  // conditioning event never hit
        return std::abs(analytic - emp) <= 3.0 * se + 1e-12;
      };
      if (!within(pt.posteriors.r1, sim.r1, sim.r1_se) ||
          !within(pt.posteriors.r0, sim.r0, sim.r0_se) ||
          !within(pt.posteriors.p_sig1, sim.p_sig1, sim.p_sig1_se) ||
          !within(m.consumer_surplus, sim.consumer_surplus,
                  sim.consumer_surplus_se) ||
          !within(m.seller_profit, sim.seller_profit, sim.seller_profit_se) ||
          !within(m.advertiser_utility, sim.advertiser_utility,
                  sim.advertiser_utility_se)) {
        record("oracle_agreement", false,
               at_q(q, "an analytic quantity sits outside 3 standard errors"));
        return;
      }
    }
    record("oracle_agreement", true, "");
  }
};

}  // namespace

std::vector<PropertyResult> run_property_suite(const ValueDistribution& dist,
                                               const TypeModel& g,
                                               const GameParams& params,
                                               const VerifyOptions& opts) {
  Suite suite{dist, g, params, opts, {}};
  suite.posterior_monotone_in_q();
  suite.posterior_reflection();
  suite.posterior_gap_nonnegative();
  suite.posterior_total_probability();
  suite.posterior_quadrature_stable();
  suite.pricing_monotone();
  suite.pricing_ordering();
  suite.pricing_revenue_optimal();
  suite.pricing_derivative_consistent();
  suite.cutoff_certificates();
  suite.uniform_kinds_exclusive();
  suite.uniform_interval_matches_boundary();
  suite.classified_points_self_check();
  suite.coexistence_orderings();
  suite.mutual_information_bounds();
  suite.cs_derivative_matches_fd();
  if (opts.include_oracle) suite.oracle_agreement();
  return suite.results;
}

}  // namespace privgame
