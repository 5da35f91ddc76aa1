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
#include "privgame/oracle.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "privgame/metrics.hpp"

namespace privgame {
namespace {

const GameParams kFig4{1.0, 1.0, 0.0, 0.0, 1.0};

TEST(Simulate, PureNoisePosteriorIsThePrior) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile monopoly{0.5, 0.5, AdvertiserStrategy::kAlwaysA};
  const SimReport sim = simulate(dist, g, kFig4, 0.5, monopoly, 1000000, 7);
  EXPECT_NEAR(sim.r1, 0.5, 3.0 * sim.r1_se);
  EXPECT_NEAR(sim.r0, 0.5, 3.0 * sim.r0_se);
  EXPECT_NEAR(sim.p_sig1, 0.5, 3.0 * sim.p_sig1_se);
}

TEST(Simulate, DiscriminatoryProfileMatchesClosedFormPosterior) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile disc{0.8, 0.2, AdvertiserStrategy::kDiscriminate};
  const SimReport sim = simulate(dist, g, kFig4, 0.8, disc, 1000000, 11);
  EXPECT_NEAR(sim.r0, 0.35, 3.0 * sim.r0_se);  // (3 - 2q)/4 at q = 0.8
  EXPECT_GT(sim.r0_se, 0.0);
}

TEST(Simulate, StepTypesMatchAppendixPosterior) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::step(0.05);
  const GameParams params{0.9, 1.0, 0.0, 0.0, 61.5};
  const StrategyProfile disc{0.77, 0.23, AdvertiserStrategy::kDiscriminate};
  const SimReport sim = simulate(dist, g, params, 0.8, disc, 1000000, 13);
  EXPECT_NEAR(sim.r0, 0.881657, 3.0 * sim.r0_se);
}

TEST(Simulate, ReproducibleBitForBit) {
  const auto dist = ValueDistribution::trunc_exp(1.0);
  const auto g = TypeModel::identity();
  const StrategyProfile disc{0.7, 0.5, AdvertiserStrategy::kDiscriminate};
  const SimReport a = simulate(dist, g, kFig4, 0.8, disc, 100000, 123);
  const SimReport b = simulate(dist, g, kFig4, 0.8, disc, 100000, 123);
  EXPECT_EQ(a.r1, b.r1);
  EXPECT_EQ(a.r0, b.r0);
  EXPECT_EQ(a.consumer_surplus, b.consumer_surplus);
  EXPECT_EQ(a.seller_profit, b.seller_profit);
  EXPECT_EQ(a.advertiser_utility, b.advertiser_utility);
  EXPECT_EQ(a.mi_bits, b.mi_bits);
  EXPECT_EQ(a.n_sig1, b.n_sig1);

  const SimReport c = simulate(dist, g, kFig4, 0.8, disc, 100000, 124);
  EXPECT_NE(a.r1, c.r1);
}

TEST(Simulate, DegenerateFullDisclosureAllBuy) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile disc{1.0, 0.0, AdvertiserStrategy::kDiscriminate};
  const SimReport sim = simulate(dist, g, kFig4, 1.0, disc, 50000, 5);
  EXPECT_EQ(sim.n_sig0, 0);
  EXPECT_EQ(sim.p_sig1, 1.0);
  EXPECT_EQ(sim.n_buy, sim.n);
  EXPECT_EQ(sim.seller_profit, 1.0);
  EXPECT_TRUE(std::isnan(sim.r0));
}

TEST(Simulate, AgreesWithAnalyticMetricsAcrossQuantities) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  for (double q : {0.7, 0.9}) {
    const EquilibriumPoint pt = candidate_point(
        dist, g, kFig4, EquilibriumKind::kDiscriminatory, q);
    const MetricsRow m = metrics_for(pt, dist, g, kFig4);
    const SimReport sim = simulate(dist, g, kFig4, q,
                                   StrategyProfile::from_equilibrium(pt),
                                   1000000, 17);
    EXPECT_NEAR(sim.r1, pt.posteriors.r1, 3.0 * sim.r1_se) << "q=" << q;
    EXPECT_NEAR(sim.r0, pt.posteriors.r0, 3.0 * sim.r0_se) << "q=" << q;
    EXPECT_NEAR(sim.p_sig1, pt.posteriors.p_sig1, 3.0 * sim.p_sig1_se);
    EXPECT_NEAR(sim.consumer_surplus, m.consumer_surplus,
                3.0 * sim.consumer_surplus_se);
    EXPECT_NEAR(sim.seller_profit, m.seller_profit,
                3.0 * sim.seller_profit_se);
    EXPECT_NEAR(sim.advertiser_utility, m.advertiser_utility,
                3.0 * sim.advertiser_utility_se);
    // Plug-in mutual information carries an O(1/n) bias on top of its SE.
    EXPECT_NEAR(sim.mi_bits, m.mi_bits, 3.0 * sim.mi_bits_se + 1e-5);
  }
}

TEST(ConvergenceSweep, ErrorsShrinkWithSampleSize) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const EquilibriumPoint pt = candidate_point(
      dist, g, kFig4, EquilibriumKind::kDiscriminatory, 0.7);
  const MetricsRow m = metrics_for(pt, dist, g, kFig4);
  const StrategyProfile profile = StrategyProfile::from_equilibrium(pt);

  const std::vector<long long> ns = {1000, 10000, 100000, 1000000};
  // RMS error over quantities and seeds, one value per n.
  std::vector<double> rms(ns.size(), 0.0);
  const int kSeeds = 8;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    const auto reports = convergence_sweep(dist, g, kFig4, 0.7, profile, ns,
                                           static_cast<std::uint64_t>(seed));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const SimReport& sim = reports[i];
      const double errs[] = {
          sim.r1 - pt.posteriors.r1,
          sim.r0 - pt.posteriors.r0,
          sim.p_sig1 - pt.posteriors.p_sig1,
          sim.consumer_surplus - m.consumer_surplus,
          sim.seller_profit - m.seller_profit,
          sim.advertiser_utility - m.advertiser_utility};
      for (double e : errs) rms[i] += e * e;
    }
  }
  // Least-squares slope of log(error) against log(n).
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
  const double n_pts = static_cast<double>(ns.size());
  const double slope = (n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);
  EXPECT_NEAR(slope, -0.5, 0.15);
}

TEST(ConvergenceSweep, ThreeSigmaCoverageHoldsAcrossSeeds) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const EquilibriumPoint pt = candidate_point(
      dist, g, kFig4, EquilibriumKind::kDiscriminatory, 0.7);
  const MetricsRow m = metrics_for(pt, dist, g, kFig4);
  const StrategyProfile profile = StrategyProfile::from_equilibrium(pt);

  int total = 0, covered = 0;
  const auto tally = [&](double analytic, double emp, double se) {
    ++total;
    if (std::abs(analytic - emp) <= 3.0 * se) ++covered;
  };
  for (int seed = 100; seed < 120; ++seed) {
    for (long long n : {1000LL, 10000LL, 100000LL}) {
      const SimReport sim =
          simulate(dist, g, kFig4, 0.7, profile, n, seed);
      tally(pt.posteriors.r1, sim.r1, sim.r1_se);
      tally(pt.posteriors.r0, sim.r0, sim.r0_se);
      tally(pt.posteriors.p_sig1, sim.p_sig1, sim.p_sig1_se);
      tally(m.consumer_surplus, sim.consumer_surplus, sim.consumer_surplus_se);
      tally(m.seller_profit, sim.seller_profit, sim.seller_profit_se);
      tally(m.advertiser_utility, sim.advertiser_utility,
            sim.advertiser_utility_se);
    }
  }
  EXPECT_GE(covered, static_cast<int>(0.99 * total))
      << covered << " of " << total;
}

TEST(ConvergenceSweep, RejectsNonAscendingSampleSizes) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile p{0.5, 0.5, AdvertiserStrategy::kAlwaysA};
  EXPECT_THROW(convergence_sweep(dist, g, kFig4, 0.7, p, {100, 100}, 1),
               std::invalid_argument);
}

TEST(Simulate, StandardErrorsScaleWithRootN) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile profile{0.75, 0.25, AdvertiserStrategy::kDiscriminate};
  const SimReport small = simulate(dist, g, kFig4, 0.75, profile, 1000, 3);
  const SimReport large = simulate(dist, g, kFig4, 0.75, profile, 1000000, 3);
  const double ratio = small.p_sig1_se / large.p_sig1_se;
  EXPECT_NEAR(ratio, std::sqrt(1000.0), 0.25 * std::sqrt(1000.0));
}

TEST(Simulate, RejectsBadArguments) {
  const auto dist = ValueDistribution::uniform01();
  const auto g = TypeModel::identity();
  const StrategyProfile p{0.5, 0.5, AdvertiserStrategy::kAlwaysA};
  EXPECT_THROW(simulate(dist, g, kFig4, 0.7, p, 0, 1), std::invalid_argument);
  EXPECT_THROW(simulate(dist, g, kFig4, 0.3, p, 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace privgame
