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
// Self-contained SVG renderings of a sweep table. Every emitter is a pure
// function of its input (no clocks, no locale), so output is byte-stable.
#ifndef PRIVGAME_SVG_HPP_
#define PRIVGAME_SVG_HPP_

#include <string>

#include "privgame/sweep.hpp"

namespace privgame {

/// Discriminatory price and cutoff plus the monopoly price, against q.
std::string svg_prices_figure(const SweepTable& table);

/// Posterior beliefs after each signal along both candidate paths, with a
/// strip showing which equilibrium kinds exist at each q.
std::string svg_posteriors_figure(const SweepTable& table);

/// Mutual information between type and reported bit, against q.
std::string svg_mutual_information_figure(const SweepTable& table);

/// Advertiser's ex-ante utility per equilibrium kind, against q.
std::string svg_advertiser_utility_figure(const SweepTable& table);

/// Consumer surplus and seller profit per equilibrium kind (two panels).
std::string svg_welfare_figure(const SweepTable& table);

/// Consumer surplus, profit and advertiser utility of whatever equilibria
/// exist: jumps and existence gaps show up as breaks in the curves.
std::string svg_discontinuity_figure(const SweepTable& table);

}  // namespace privgame

#endif  // PRIVGAME_SVG_HPP_
