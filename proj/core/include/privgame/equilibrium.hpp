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
// Classification of the three pure-strategy equilibrium kinds at a privacy
// level, location of existence boundaries in q, and the cutoff best-response
// check.
#ifndef PRIVGAME_EQUILIBRIUM_HPP_
#define PRIVGAME_EQUILIBRIUM_HPP_

#include <string>
#include <vector>

#include "privgame/model.hpp"
#include "privgame/posterior.hpp"
#include "privgame/pricing.hpp"

namespace privgame {

enum class EquilibriumKind { kDiscriminatory, kUniformA, kUniformB };

const char* to_string(EquilibriumKind kind);

/// One classified equilibrium at one q. Discriminatory points carry the
/// discriminatory price/cutoff and path posteriors; uniform points carry
/// price = cutoff = p_m. boundary_flag marks a posterior within kEtaTieTol
/// of eta (a region endpoint).
struct EquilibriumPoint {
  EquilibriumKind kind;
  double q = 0.0;
  double price = 0.0;
  double cutoff = 0.0;
  PosteriorPair posteriors;
  bool boundary_flag = false;
  bool corner = false;           // discriminatory cutoff clamped to 0
  double p1_derivative = 0.0;    // defined for discriminatory points
};

/// Builds the candidate point of a kind at q without checking the
/// advertiser's optimality conditions: the discriminatory candidate solves
/// the seller's problem and reads posteriors along the path, a uniform
/// candidate prices at p_m with myopic consumers. Useful for fixed-kind
/// welfare comparisons.
EquilibriumPoint candidate_point(const ValueDistribution& dist,
                                 const TypeModel& g, const GameParams& params,
                                 EquilibriumKind kind, double q);

/// Evaluates the candidate profiles and returns every kind whose posterior
/// condition holds (weak comparisons with the kEtaTieTol tie band). The set
/// may be empty; UniformA and UniformB are never both returned, and the
/// discriminatory kind is suppressed when both posteriors tie with eta
/// (the q=1/2 collapse).
std::vector<EquilibriumPoint> classify(const ValueDistribution& dist,
                                       const TypeModel& g,
                                       const GameParams& params, double q);

enum class BindingSignal { kR1, kR0 };

/// Largest q in [1/2,1] at which the binding posterior at the monopoly
/// cutoff equals eta; entire_interval is set when the uniform kind survives
/// on all of [1/2,1].
struct ExistenceBoundary {
  EquilibriumKind kind;
  double q_bar = 1.0;
  BindingSignal side = BindingSignal::kR0;
  bool entire_interval = false;
};

/// Boundary of the uniform region of the given kind. The kind must match the
/// prior side of eta (the kind that exists at q=1/2); otherwise throws
/// std::invalid_argument.
ExistenceBoundary uniform_boundary(const ValueDistribution& dist,
                                   const TypeModel& g,
                                   const GameParams& params,
                                   EquilibriumKind kind);

struct QInterval {
  double lo;
  double hi;
};

/// Maximal q-intervals on [1/2,1] where a discriminatory equilibrium exists,
/// found by a grid scan with each boundary refined by bisection on the
/// binding condition to 1e-6. May be empty; may contain several intervals.
std::vector<QInterval> discriminatory_intervals(const ValueDistribution& dist,
                                                const TypeModel& g,
                                                const GameParams& params,
                                                int grid_points = 513);

/// Consumer best response to a posted price under an advertiser strategy:
/// the buy set is an upper interval in value. Returns its lower endpoint
/// (clamped to [0,1] for the discriminatory strategy) plus a grid
/// certificate that buy-vs-not utility crosses zero once from below.
struct CutoffResponse {
  double cutoff;
  bool upper_interval_certified;
};

CutoffResponse best_response_cutoff(const GameParams& params,
                                    AdvertiserStrategy strategy, double price,
                                    double q, int grid_points = 1001);

}  // namespace privgame

#endif  // PRIVGAME_EQUILIBRIUM_HPP_
