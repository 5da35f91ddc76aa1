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
// Plain-text key=value game specification files.
#ifndef PRIVGAME_CONFIG_HPP_
#define PRIVGAME_CONFIG_HPP_

#include <stdexcept>
#include <string>

#include "privgame/model.hpp"

namespace privgame {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed game specification plus sweep grid and output settings. Defaults
/// are the worked-example game: uniform values, g(v) = v, delta = 1 and
/// payoffs (1, 0, 0, 1), i.e. eta = 1/2.
struct RunConfig {
  // Model keys.
  std::string distribution = "uniform";  // uniform | trunc_exp | power
  double lambda = 1.0;                   // trunc_exp rate
  double power_k = 2.0;                  // power CDF exponent
  std::string type_model = "identity";   // identity | step | affine
  double step_threshold = 0.5;
  double affine_a = 0.0;
  double affine_b = 1.0;
  double delta = 1.0;
  double s1A = 1.0;
  double s2A = 0.0;
  double s1B = 0.0;
  double s2B = 1.0;

  // Grid and output keys.
  double q_min = 0.5;
  double q_max = 1.0;
  int steps = 513;
  std::string out_dir = "./out";

  ValueDistribution make_distribution() const;
  TypeModel make_type_model() const;
  GameParams make_params() const;
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are
/// ignored. Unknown keys, malformed lines, bad numbers and out-of-range grid
/// settings raise ConfigError.
RunConfig parse_config_text(const std::string& text);

/// Reads and parses a config file; raises ConfigError when unreadable.
RunConfig parse_config_file(const std::string& path);

}  // namespace privgame

#endif  // PRIVGAME_CONFIG_HPP_
