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

#include <cstddef>
#include <fstream>
#include <sstream>

namespace privgame {

ValueDistribution RunConfig::make_distribution() const {
  if (distribution == "uniform") return ValueDistribution::uniform01();
  if (distribution == "trunc_exp") return ValueDistribution::trunc_exp(lambda);
  if (distribution == "power") return ValueDistribution::power_cdf(power_k);
  throw ConfigError("unknown distribution: " + distribution);
}

TypeModel RunConfig::make_type_model() const {
  if (type_model == "identity") return TypeModel::identity();
  if (type_model == "step") return TypeModel::step(step_threshold);
  if (type_model == "affine") return TypeModel::affine(affine_a, affine_b);
  throw ConfigError("unknown type_model: " + type_model);
}

GameParams RunConfig::make_params() const {
  return GameParams{delta, s1A, s2A, s1B, s2B};
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: '" + value + "'");
  }
  if (pos != value.size()) {
    throw ConfigError("key '" + key + "': trailing characters in '" + value +
                      "'");
  }
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  const double x = parse_number(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + value +
                      "'");
  }
  return i;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream stream(text);
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");
    }

    if (key == "distribution") {
      cfg.distribution = value;
    } else if (key == "lambda") {
      cfg.lambda = parse_number(key, value);
    } else if (key == "power_k") {
      cfg.power_k = parse_number(key, value);
    } else if (key == "type_model") {
      cfg.type_model = value;
    } else if (key == "step_threshold") {
      cfg.step_threshold = parse_number(key, value);
    } else if (key == "affine_a") {
      cfg.affine_a = parse_number(key, value);
    } else if (key == "affine_b") {
      cfg.affine_b = parse_number(key, value);
    } else if (key == "delta") {
      cfg.delta = parse_number(key, value);
    } else if (key == "s1A") {
      cfg.s1A = parse_number(key, value);
    } else if (key == "s2A") {
      cfg.s2A = parse_number(key, value);
    } else if (key == "s1B") {
      cfg.s1B = parse_number(key, value);
    } else if (key == "s2B") {
      cfg.s2B = parse_number(key, value);
    } else if (key == "q_min") {
      cfg.q_min = parse_number(key, value);
    } else if (key == "q_max") {
      cfg.q_max = parse_number(key, value);
    } else if (key == "steps") {
      cfg.steps = parse_int(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
    }
  }

  if (cfg.distribution != "uniform" && cfg.distribution != "trunc_exp" &&
      cfg.distribution != "power") {
    throw ConfigError("unknown distribution: " + cfg.distribution);
  }
  if (cfg.type_model != "identity" && cfg.type_model != "step" &&
      cfg.type_model != "affine") {
    throw ConfigError("unknown type_model: " + cfg.type_model);
  }
  if (!(cfg.q_min >= 0.5)) throw ConfigError("q_min must be >= 1/2");
  if (!(cfg.q_max <= 1.0)) throw ConfigError("q_max must be <= 1");
  if (!(cfg.q_min <= cfg.q_max)) throw ConfigError("q_min must be <= q_max");
  if (cfg.steps < 2) throw ConfigError("steps must be >= 2");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace privgame
