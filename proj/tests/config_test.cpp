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
#include "privgame/config.hpp"

#include <gtest/gtest.h>

namespace privgame {
namespace {

TEST(Config, ParsesFullKeySet) {
  const auto cfg = parse_config_text(
      "distribution = trunc_exp\n"
      "lambda = 2.5\n"
      "type_model = step\n"
      "step_threshold = 0.05  # appendix game\n"
      "delta = 0.9\n"
      "s1A = 0.5\n"
      "s2A = 0.05\n"
      "s1B = 0.05\n"
      "s2B = 0.6\n"
      "q_min = 0.6\n"
      "q_max = 0.9\n"
      "steps = 31\n"
      "out_dir = /tmp/x\n");
  EXPECT_EQ(cfg.distribution, "trunc_exp");
  EXPECT_DOUBLE_EQ(cfg.lambda, 2.5);
  EXPECT_EQ(cfg.type_model, "step");
  EXPECT_DOUBLE_EQ(cfg.step_threshold, 0.05);
  EXPECT_DOUBLE_EQ(cfg.delta, 0.9);
  EXPECT_NEAR(cfg.make_params().eta(), 0.55, 1e-12);
  EXPECT_EQ(cfg.steps, 31);
  EXPECT_EQ(cfg.out_dir, "/tmp/x");
}

TEST(Config, DefaultsAreTheWorkedExample) {
  const auto cfg = parse_config_text("");
  EXPECT_EQ(cfg.distribution, "uniform");
  EXPECT_EQ(cfg.type_model, "identity");
  EXPECT_DOUBLE_EQ(cfg.delta, 1.0);
  EXPECT_DOUBLE_EQ(cfg.make_params().eta(), 0.5);
  EXPECT_EQ(cfg.steps, 513);
  EXPECT_DOUBLE_EQ(cfg.q_min, 0.5);
  EXPECT_DOUBLE_EQ(cfg.q_max, 1.0);
}

TEST(Config, UnknownKeyIsAnError) {
  EXPECT_THROW(parse_config_text("nope = 1\n"), ConfigError);
}

TEST(Config, MalformedLineIsAnError) {
  EXPECT_THROW(parse_config_text("distribution uniform\n"), ConfigError);
}

TEST(Config, BadNumberIsAnError) {
  EXPECT_THROW(parse_config_text("delta = abc\n"), ConfigError);
  EXPECT_THROW(parse_config_text("steps = 10.5\n"), ConfigError);
}

TEST(Config, GridRangeIsChecked) {
  EXPECT_THROW(parse_config_text("q_min = 0.4\n"), ConfigError);
  EXPECT_THROW(parse_config_text("q_max = 1.2\n"), ConfigError);
  EXPECT_THROW(parse_config_text("steps = 1\n"), ConfigError);
  EXPECT_THROW(parse_config_text("q_min = 0.9\nq_max = 0.6\n"), ConfigError);
}

TEST(Config, UnknownDistributionOrTypeModelIsAnError) {
  EXPECT_THROW(parse_config_text("distribution = cauchy\n"), ConfigError);
  EXPECT_THROW(parse_config_text("type_model = quadratic\n"), ConfigError);
}

TEST(Config, BuildsModelObjects) {
  const auto cfg = parse_config_text(
      "distribution = power\npower_k = 2\ntype_model = affine\n"
      "affine_a = 0.2\naffine_b = 0.6\n");
  EXPECT_NEAR(cfg.make_distribution().cdf(0.5), 0.25, 1e-15);
  EXPECT_NEAR(cfg.make_type_model()(0.5), 0.5, 1e-15);
}

TEST(Config, MissingFileIsAnError) {
  EXPECT_THROW(parse_config_file("/nonexistent/game.cfg"), ConfigError);
}

}  // namespace
}  // namespace privgame
