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
#include "privgame/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

namespace privgame {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(PrivacyConversion, Endpoints) {
  EXPECT_DOUBLE_EQ(q_from_epsilon(0.0), 0.5);
  EXPECT_EQ(q_from_epsilon(kInf), 1.0);
  EXPECT_DOUBLE_EQ(epsilon_from_q(0.5), 0.0);
  EXPECT_EQ(epsilon_from_q(1.0), kInf);
}

TEST(PrivacyConversion, LogThreeGivesThreeQuarters) {
  EXPECT_NEAR(q_from_epsilon(std::log(3.0)), 0.75, 1e-15);
  EXPECT_NEAR(epsilon_from_q(0.75), std::log(3.0), 1e-15);
}

TEST(PrivacyConversion, RejectsOutOfRange) {
  EXPECT_THROW(q_from_epsilon(-0.1), std::invalid_argument);
  EXPECT_THROW(epsilon_from_q(0.4), std::invalid_argument);
  EXPECT_THROW(epsilon_from_q(1.1), std::invalid_argument);
}

TEST(PrivacyConversion, QSideRoundTrip) {
  for (double q = 0.5; q <= 1.0 - 1e-9; q += 0.01) {
    EXPECT_NEAR(q_from_epsilon(epsilon_from_q(q)), q, 1e-12);
  }
  EXPECT_NEAR(q_from_epsilon(epsilon_from_q(1.0 - 1e-9)), 1.0 - 1e-9, 1e-12);
}

// The epsilon-side round trip through doubles is limited by the resolution
// of q near 1: above eps ~ 16 the tail 1-q carries too few bits. The
// PrivacyLevel type stores epsilon explicitly, which keeps the full [0,36]
// range exact; the raw function composition is checked where representable.
TEST(PrivacyConversion, EpsilonSideRoundTrip) {
  for (double eps = 0.0; eps <= 16.0; eps += 0.125) {
    EXPECT_NEAR(epsilon_from_q(q_from_epsilon(eps)), eps, 1e-9);
  }
  for (double eps = 0.0; eps <= 36.0; eps += 0.25) {
    EXPECT_EQ(PrivacyLevel::from_epsilon(eps).epsilon(), eps);
  }
  EXPECT_EQ(PrivacyLevel::from_q(1.0).epsilon(), kInf);
  EXPECT_EQ(PrivacyLevel::from_epsilon(kInf).q(), 1.0);
}

TEST(SignalChannel, SymmetricFlip) {
  const SignalChannel channel{0.8};
  EXPECT_DOUBLE_EQ(channel.pr_report(1, 1), 0.8);
  EXPECT_DOUBLE_EQ(channel.pr_report(0, 1), 0.2);
  EXPECT_DOUBLE_EQ(channel.pr_report(0, 0), 0.8);
}

TEST(AdvertiserStrategies, ThreeAdmissibleRules) {
  EXPECT_EQ(ad_for_signal(AdvertiserStrategy::kDiscriminate, 1), Ad::kA);
  EXPECT_EQ(ad_for_signal(AdvertiserStrategy::kDiscriminate, 0), Ad::kB);
  EXPECT_EQ(ad_for_signal(AdvertiserStrategy::kAlwaysA, 0), Ad::kA);
  EXPECT_EQ(ad_for_signal(AdvertiserStrategy::kAlwaysB, 1), Ad::kB);
}

TEST(GameParams, EtaFromPayoffs) {
  const GameParams fig4{1.0, 1.0, 0.0, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(fig4.eta(), 0.5);
  const GameParams skewed{1.0, 0.5, 0.05, 0.05, 0.6};
  EXPECT_NEAR(skewed.eta(), 0.55, 1e-15);
}

TEST(Validate, WorkedExampleInstancePasses) {
  const GameParams params{1.0, 1.0, 0.0, 0.0, 1.0};
  const auto report = validate(ValueDistribution::uniform01(),
                               TypeModel::identity(), params);
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(Validate, BuiltinsPassAtSeveralGridSizes) {
  const GameParams params{0.5, 1.0, 0.0, 0.0, 1.0};
  const ValueDistribution dists[] = {
      ValueDistribution::uniform01(), ValueDistribution::trunc_exp(1.0),
      ValueDistribution::trunc_exp(-4.0), ValueDistribution::power_cdf(2.0)};
  for (const auto& dist : dists) {
    for (int grid : {256, 1024, 4096}) {
      const auto report = validate(dist, TypeModel::identity(), params, grid);
      EXPECT_TRUE(report.ok())
          << dist.label() << " grid " << grid << ": " << report.to_string();
    }
  }
}

TEST(Validate, StepTypeModelPasses) {
  const GameParams params{0.9, 1.0, 0.0, 0.0, 1.0};
  const auto report = validate(ValueDistribution::uniform01(),
                               TypeModel::step(0.05), params);
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(Validate, DecreasingHazardIsReported) {
  // A power CDF with exponent below one has a decreasing hazard near zero.
  const GameParams params{1.0, 1.0, 0.0, 0.0, 1.0};
  const auto report = validate(ValueDistribution::power_cdf(0.5),
                               TypeModel::identity(), params);
  ASSERT_FALSE(report.ok());
  bool hazard_flagged = false;
  for (const auto& v : report.violations) {
    hazard_flagged = hazard_flagged || v.check == "hazard non-decreasing";
  }
  EXPECT_TRUE(hazard_flagged) << report.to_string();
}

TEST(Validate, DecreasingTypeMapIsReported) {
  const GameParams params{1.0, 1.0, 0.0, 0.0, 1.0};
  const auto g = TypeModel::custom([](double v) { return 1.0 - v; });
  const auto report =
      validate(ValueDistribution::uniform01(), g, params);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].check, "g non-decreasing");
}

TEST(Validate, BadPayoffOrderingIsReported) {
  const GameParams params{1.0, 0.0, 0.0, 1.0, 1.0};  // s1A < s1B
  const auto report = validate(ValueDistribution::uniform01(),
                               TypeModel::identity(), params);
  ASSERT_FALSE(report.ok());
  bool payoff_flagged = false;
  for (const auto& v : report.violations) {
    payoff_flagged = payoff_flagged || v.check == "s1A > s1B";
  }
  EXPECT_TRUE(payoff_flagged);
}

TEST(PriorT1, UniformIdentityIsHalf) {
  EXPECT_NEAR(prior_t1(ValueDistribution::uniform01(), TypeModel::identity()),
              0.5, 1e-12);
}

TEST(PriorT1, StepIsMassAboveThreshold) {
  EXPECT_NEAR(prior_t1(ValueDistribution::uniform01(), TypeModel::step(0.05)),
              0.95, 1e-12);
}

TEST(PriorT1, TruncExpMatchesHighResolutionOracle) {
  // Independent oracle: fixed-grid Simpson at 2^20 panels of v e^v/(e-1).
  const int n = 1 << 20;
  const double h = 1.0 / n;
  const auto f = [](double v) { return v * std::exp(v) / (std::exp(1.0) - 1.0); };
  double sum = f(0.0) + f(1.0);
  for (int i = 1; i < n; i += 2) sum += 4.0 * f(i * h);
  for (int i = 2; i < n; i += 2) sum += 2.0 * f(i * h);
  const double oracle = sum * h / 3.0;

  const double got =
      prior_t1(ValueDistribution::trunc_exp(1.0), TypeModel::identity());
  EXPECT_NEAR(got, oracle, 1e-9);
  EXPECT_NEAR(got, 0.5820, 1e-4);
}

TEST(PriorT1, StableUnderToleranceDoubling) {
  const auto dist = ValueDistribution::trunc_exp(1.0);
  const auto g = TypeModel::identity();
  const double coarse = prior_t1(dist, g, kQuadratureTol);
  const double fine = prior_t1(dist, g, 0.5 * kQuadratureTol);
  EXPECT_NEAR(coarse, fine, 1e-9);
}

}  // namespace
}  // namespace privgame
