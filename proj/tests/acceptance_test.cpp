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
// Acceptance suite: one test per criterion, each printing its own pass/fail
// line through the googletest runner.
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "privgame/equilibrium.hpp"
#include "privgame/metrics.hpp"
#include "privgame/model.hpp"
#include "privgame/oracle.hpp"
#include "privgame/posterior.hpp"
#include "privgame/pricing.hpp"

namespace privgame {
namespace {

const GameParams kFig4{1.0, 1.0, 0.0, 0.0, 1.0};
const GameParams kEta55{1.0, 0.5, 0.05, 0.05, 0.6};
const GameParams kEta45{1.0, 0.6, 0.05, 0.05, 0.5};
const GameParams kCoexist{0.8, 1.0, 0.0, 0.0, 1.0};

// Closed forms of the worked-example game (uniform values, g(v)=v, delta=1).
double r1_monopoly(double q) { return (1 + 2 * q) / 4; }
double r0_closed(double q) { return (3 - 2 * q) / 4; }
double r1_path(double q) {
  return (-2 * q * q * q + 5 * q * q - 3 * q + 1) / (4 * (q * q - q + 0.5));
}

// Grid argmax refined by golden section inside the bracketing cells.
double argmax_on_half_one(const std::function<double(double)>& f) {
  const int n = 800;
  int best = 0;
  double best_val = -1e300;
  std::vector<double> qs(n + 1);
  for (int i = 0; i <= n; ++i) {
    qs[i] = 0.5 + 0.5 * i / n;
    const double val = f(qs[i]);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  double a = qs[std::max(0, best - 1)];
  double b = qs[std::min(n, best + 1)];
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  while (b - a > 1e-10) {
    const double c = b - gr * (b - a);
    const double d = a + gr * (b - a);
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return 0.5 * (a + b);
}

TEST(Acceptance, Criterion1ClosedFormPosteriorRegression) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const auto cutoff_of_q = [&](double q) {
    return discriminatory_price(dist, 1.0, q).v_star;
  };
  double max_err = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double q = 0.5 + 0.5 * i / 100.0;
    const PosteriorPair at_monopoly = posterior(dist, g, 0.5, q);
    max_err = std::max(max_err, std::abs(at_monopoly.r1 - r1_monopoly(q)));
    max_err = std::max(max_err, std::abs(at_monopoly.r0 - r0_closed(q)));
    const PosteriorPair on_path = posterior_on_path(dist, g, cutoff_of_q, q);
    max_err = std::max(max_err, std::abs(on_path.r1 - r1_path(q)));
    max_err = std::max(max_err, std::abs(on_path.r0 - r0_closed(q)));
  }
  EXPECT_LE(max_err, 1e-8);
}

TEST(Acceptance, Criterion2Prices) {
  EXPECT_NEAR(monopoly_price(ValueDistribution::uniform01()), 0.5, 1e-10);
  EXPECT_NEAR(monopoly_price(ValueDistribution::trunc_exp(1.0)), 0.557146,
              5e-5);
  const auto dist = ValueDistribution::uniform01();
  for (int i = 0; i <= 100; ++i) {
    const double q = 0.5 + 0.5 * i / 100.0;
    const auto sol = discriminatory_price(dist, 1.0, q);
    EXPECT_NEAR(sol.p1, 0.5 + (2 * q - 1) * 0.5, 1e-10) << "q=" << q;
    EXPECT_NEAR(sol.v_star, 0.5 - (2 * q - 1) * 0.5, 1e-10) << "q=" << q;
  }
}

TEST(Acceptance, Criterion3StepTypePosteriors) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::step(0.05);
  const auto sol = discriminatory_price(dist, 0.9, 0.8);
  ASSERT_NEAR(sol.v_star, 0.23, 1e-12);
  const PosteriorPair p = posterior(dist, g, sol.v_star, 0.8);
  EXPECT_NEAR(p.r0, 0.88166, 5e-4);
  EXPECT_NEAR(p.r1, 0.98484, 1e-3);
  EXPECT_NEAR(p.r1, 0.984894, 1e-5);
}

TEST(Acceptance, Criterion4NonMonotonicityTriple) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const auto cutoff_of_q = [&](double q) {
    return discriminatory_price(dist, 1.0, q).v_star;
  };
  const double q_r1 = argmax_on_half_one([&](double q) {
    return posterior_on_path(dist, g, cutoff_of_q, q).r1;
  });
  const double q_mi = argmax_on_half_one([&](double q) {
    return mutual_information(dist, g, cutoff_of_q(q), q);
  });
  const double q_adv = argmax_on_half_one([&](double q) {
    const auto pt =
        candidate_point(dist, g, kFig4, EquilibriumKind::kDiscriminatory, q);
    return advertiser_utility(pt, kFig4);
  });

  for (double q_star : {q_r1, q_mi, q_adv}) {
    EXPECT_GT(q_star, 0.5 + 1e-3);
    EXPECT_LT(q_star, 1.0 - 1e-3);
  }
  EXPECT_NEAR(q_adv, 0.789, 0.01);
  const auto peak =
      candidate_point(dist, g, kFig4, EquilibriumKind::kDiscriminatory, q_adv);
  EXPECT_NEAR(advertiser_utility(peak, kFig4), 0.596, 0.005);

  EXPECT_GE(std::abs(q_r1 - q_mi), 0.01);
  EXPECT_GE(std::abs(q_r1 - q_adv), 0.01);
  EXPECT_GE(std::abs(q_mi - q_adv), 0.01);
}

TEST(Acceptance, Criterion5EquilibriumRegionStructure) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();

  // eta = 0.55: uniform B up to 0.6, gap, discriminatory interval, gap.
  const auto b_boundary =
      uniform_boundary(dist, g, kEta55, EquilibriumKind::kUniformB);
  ASSERT_FALSE(b_boundary.entire_interval);
  EXPECT_NEAR(b_boundary.q_bar, 0.600, 0.005);

  const auto intervals = discriminatory_intervals(dist, g, kEta55);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_NEAR(intervals[0].lo, 0.611, 0.005);
  EXPECT_NEAR(intervals[0].hi, 0.885, 0.005);

  const struct {
    double q;
    const char* expect;  // single expected kind or nothing
  } samples[] = {{0.55, "uniform_B"},
                 {0.595, "uniform_B"},
                 {0.605, ""},
                 {0.75, "discriminatory"},
                 {0.87, "discriminatory"},
                 {0.93, ""},
                 {1.0, ""}};
  for (const auto& s : samples) {
    const auto points = classify(dist, g, kEta55, s.q);
    if (s.expect[0] == '\0') {
      EXPECT_TRUE(points.empty()) << "q=" << s.q;
    } else {
      ASSERT_EQ(points.size(), 1u) << "q=" << s.q;
      EXPECT_STREQ(to_string(points[0].kind), s.expect) << "q=" << s.q;
    }
  }

  // eta = 0.45: uniform A hands off to discriminatory at 0.6.
  const auto a_boundary =
      uniform_boundary(dist, g, kEta45, EquilibriumKind::kUniformA);
  ASSERT_FALSE(a_boundary.entire_interval);
  EXPECT_NEAR(a_boundary.q_bar, 0.600, 0.005);
  const auto intervals45 = discriminatory_intervals(dist, g, kEta45);
  ASSERT_EQ(intervals45.size(), 1u);
  EXPECT_NEAR(intervals45[0].lo, 0.600, 0.005);
  EXPECT_NEAR(intervals45[0].hi, 1.0, 1e-6);
}

TEST(Acceptance, Criterion6CoexistenceAndOrderings) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::step(0.1);

  const auto a_boundary =
      uniform_boundary(dist, g, kCoexist, EquilibriumKind::kUniformA);
  EXPECT_TRUE(a_boundary.entire_interval);

  // Oracle for the discriminatory onset: r(0, v*(q), q) = 1/2 reduces to the
  // quadratic 0.8 u^2 - 0.2 u - 0.8 = 0 in u = 1 - 2q.
  const double u = (0.2 - std::sqrt(0.04 + 4 * 0.8 * 0.8)) / 1.6;
  const double q_onset = (1.0 - u) / 2.0;
  ASSERT_NEAR(q_onset, 0.941391, 1e-6);

  const auto intervals = discriminatory_intervals(dist, g, kCoexist);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_NEAR(intervals[0].lo, q_onset, 0.005);
  EXPECT_NEAR(intervals[0].hi, 1.0, 1e-6);

  for (double q : {0.95, 0.98, 1.0}) {
    const auto points = classify(dist, g, kCoexist, q);
    const EquilibriumPoint* disc = nullptr;
    const EquilibriumPoint* uni = nullptr;
    for (const auto& pt : points) {
      if (pt.kind == EquilibriumKind::kDiscriminatory) disc = &pt;
      if (pt.kind == EquilibriumKind::kUniformA) uni = &pt;
    }
    ASSERT_NE(disc, nullptr) << "q=" << q;
    ASSERT_NE(uni, nullptr) << "q=" << q;

    EXPECT_GT(consumer_surplus(*uni, dist, kCoexist),
              consumer_surplus(*disc, dist, kCoexist));
    EXPECT_GT(seller_profit(*disc, dist), seller_profit(*uni, dist));
    // Uniform A is preferred by every sampled consumer value.
    for (int i = 0; i <= 100; ++i) {
      const double v = static_cast<double>(i) / 100.0;
      const double u_uniform = std::max(v - uni->price, 0.0) + kCoexist.delta;
      const double u_disc =
          std::max(v - disc->price + q * kCoexist.delta,
                   (1.0 - q) * kCoexist.delta);
      EXPECT_GT(u_uniform, u_disc) << "q=" << q << " v=" << v;
    }
  }
}

TEST(Acceptance, Criterion7WelfareDerivative) {
  const auto g = TypeModel::identity();
  const double h = 1e-4;
  const struct {
    ValueDistribution dist;
    GameParams params;
  } games[] = {{ValueDistribution::uniform01(), kFig4},
               {ValueDistribution::trunc_exp(1.0),
                GameParams{0.5, 1.0, 0.0, 0.0, 1.0}}};
  for (const auto& game : games) {
    for (int i = 0; i < 21; ++i) {
      const double q = 0.52 + (0.98 - 0.52) * i / 20.0;
      const auto cs_at = [&](double qq) {
        return consumer_surplus(
            candidate_point(game.dist, g, game.params,
                            EquilibriumKind::kDiscriminatory, qq),
            game.dist, game.params);
      };
      const double fd = (cs_at(q + h) - cs_at(q - h)) / (2.0 * h);
      EXPECT_NEAR(cs_derivative(game.dist, game.params, q), fd, 1e-6)
          << game.dist.label() << " q=" << q;
    }
  }

  for (int i = 0; i < 21; ++i) {
    const double q = 0.52 + (0.98 - 0.52) * i / 20.0;
    EXPECT_NEAR(cs_derivative(ValueDistribution::uniform01(), kFig4, q),
                q - 1.0, 1e-9);
  }

  // Near-constant inverse hazard with F(v*) < 1/2: welfare rises in q.
  const auto decaying = ValueDistribution::trunc_exp(-4.0);
  const GameParams params{0.5, 1.0, 0.0, 0.0, 1.0};
  const auto sol = discriminatory_price(decaying, params.delta, 0.65);
  ASSERT_LT(decaying.cdf(sol.v_star), 0.5);
  EXPECT_GT(cs_derivative(decaying, params, 0.65), 0.0);
}

TEST(Acceptance, Criterion8OracleAgreementAndConvergence) {
  const std::uint64_t seed = 20260810;
  const struct {
    ValueDistribution dist;
    TypeModel g;
    GameParams params;
  } models[] = {
      {ValueDistribution::uniform01(), TypeModel::identity(), kFig4},
      {ValueDistribution::trunc_exp(1.0), TypeModel::identity(),
       GameParams{0.5, 1.0, 0.0, 0.0, 1.0}},
      {ValueDistribution::power_cdf(2.0), TypeModel::affine(0.2, 0.6),
       GameParams{0.8, 1.0, 0.0, 0.0, 1.0}}};

  for (const auto& model : models) {
    for (double q : {0.5, 0.7, 0.9, 1.0}) {
      const auto pt = candidate_point(model.dist, model.g, model.params,
                                      EquilibriumKind::kDiscriminatory, q);
      const MetricsRow m = metrics_for(pt, model.dist, model.g, model.params);
      const SimReport sim =
          simulate(model.dist, model.g, model.params, q,
                   StrategyProfile::from_equilibrium(pt), 1000000, seed);
      const auto check = [&](double analytic, double emp, double se,
                             const char* what) {
        if (std::isnan(emp)) return;  // conditioning event never occurred
        EXPECT_LE(std::abs(analytic - emp), 3.0 * se + 1e-12)
            << model.dist.label() << " q=" << q << " " << what;
      };
      check(pt.posteriors.r1, sim.r1, sim.r1_se, "r1");
      check(pt.posteriors.r0, sim.r0, sim.r0_se, "r0");
      check(pt.posteriors.p_sig1, sim.p_sig1, sim.p_sig1_se, "p_sig1");
      check(m.consumer_surplus, sim.consumer_surplus, sim.consumer_surplus_se,
            "cs");
      check(m.seller_profit, sim.seller_profit, sim.seller_profit_se,
            "profit");
      check(m.advertiser_utility, sim.advertiser_utility,
            sim.advertiser_utility_se, "adv_utility");
    }
  }

  // Log-log error slope against n on the worked example at q = 0.7.
  const auto& m1 = models[0];
  const auto pt = candidate_point(m1.dist, m1.g, m1.params,
                                  EquilibriumKind::kDiscriminatory, 0.7);
  const MetricsRow metrics = metrics_for(pt, m1.dist, m1.g, m1.params);
  const StrategyProfile profile = StrategyProfile::from_equilibrium(pt);
  const std::vector<long long> ns = {1000, 10000, 100000, 1000000};
  std::vector<double> rms(ns.size(), 0.0);
  const int kSeeds = 8;
  for (int s = 1; s <= kSeeds; ++s) {
    const auto reports =
        convergence_sweep(m1.dist, m1.g, m1.params, 0.7, profile, ns, s);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const SimReport& sim = reports[i];
      const double errs[] = {
          sim.r1 - pt.posteriors.r1,
          sim.r0 - pt.posteriors.r0,
          sim.p_sig1 - pt.posteriors.p_sig1,
          sim.consumer_surplus - metrics.consumer_surplus,
          sim.seller_profit - metrics.seller_profit,
          sim.advertiser_utility - metrics.advertiser_utility};
      for (double e : errs) rms[i] += e * e;
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rms[i] = std::sqrt(rms[i] / (6.0 * kSeeds));
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(rms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(ns.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  EXPECT_NEAR(slope, -0.5, 0.15);
}

TEST(Acceptance, Criterion9MutualInformationEndpoints) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  EXPECT_EQ(mutual_information(dist, g, 0.37, 0.5), 0.0);
  // Worked-example path at full disclosure: everyone buys, the bit is
  // constant.
  const double cutoff_at_one = discriminatory_price(dist, 1.0, 1.0).v_star;
  ASSERT_EQ(cutoff_at_one, 0.0);
  EXPECT_EQ(mutual_information(dist, g, cutoff_at_one, 1.0), 0.0);
  EXPECT_GT(mutual_information(dist, g, 0.25, 0.75), 0.02);
}

// The two numeric values below do not satisfy the first-order condition
// they are quoted with; the solver's values do, and the brute-force grid
// agrees with the solver. Kept as permanent regression documentation.
TEST(Acceptance, InconsistentReferencePriceFailsFoc) {
  const auto dist = ValueDistribution::trunc_exp(1.0);
  const double delta = 0.5, q = 1.0;
  const auto sol = discriminatory_price(dist, delta, q);

  const auto foc_residual = [&](double p) {
    return p - dist.inverse_hazard(p + (1.0 - 2.0 * q) * delta);
  };
  EXPECT_LT(std::abs(foc_residual(sol.p1)), 1e-9);
  EXPECT_GT(std::abs(foc_residual(0.56324)), 0.9);
  EXPECT_GT(std::abs(sol.p1 - 0.56324), 0.3);

  double best_p = 0.0, best_rev = -1.0;
  for (int i = 0; i <= 200000; ++i) {
    const double p = 1.6 * i / 200000;
    const double cutoff = std::min(1.0, std::max(0.0, p - delta));
    const double rev = p * (1.0 - dist.cdf(cutoff));
    if (rev > best_rev) {
      best_rev = rev;
      best_p = p;
    }
  }
  EXPECT_NEAR(sol.p1, best_p, 1e-4);

  // With FOC-consistent prices the ad bonus outweighs the price premium, so
  // every buying consumer prefers the discriminatory outcome here.
  EXPECT_GT(delta * q, sol.p1 - sol.p_m);
}

TEST(Acceptance, InconsistentSlopeCoefficientFailsFiniteDifference) {
  const auto dist = ValueDistribution::uniform01();
  const double q = 0.75, delta = 1.0, h = 1e-5;
  const auto sol = discriminatory_price(dist, delta, q);
  const double fd = (discriminatory_price(dist, delta, q + h).p1 -
                     discriminatory_price(dist, delta, q - h).p1) /
                    (2.0 * h);
  EXPECT_NEAR(sol.p1_derivative, fd, 1e-5);
  const double ip = -1.0;  // I' for uniform values
  const double coeff_2q = 2.0 * q * ip / (ip - 1.0);
  EXPECT_GT(std::abs(coeff_2q - fd), 0.2);
}

}  // namespace
}  // namespace privgame
