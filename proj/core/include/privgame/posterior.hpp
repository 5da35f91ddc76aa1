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
// The advertiser's Bayesian posterior over the consumer's type given the
// noisy purchase bit, for a cutoff purchase strategy and channel fidelity q.
#ifndef PRIVGAME_POSTERIOR_HPP_
#define PRIVGAME_POSTERIOR_HPP_

#include <functional>

#include "privgame/model.hpp"

namespace privgame {

/// Posterior probabilities of type t1 after each signal, together with the
/// conditional type means below/above the cutoff (alpha1 <= alpha2) and the
/// signal probabilities. r1 and r0 are convex combinations of alpha1 and
/// alpha2, so both lie in [alpha1, alpha2].
///
/// limit_flag marks a posterior that conditioned on a signal of probability
/// below kSignalProbFloor and was therefore evaluated as a limit rather than
/// by the ratio formula.
struct PosteriorPair {
  double r1 = 0.0;
  double r0 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double p_sig1 = 0.0;
  double p_sig0 = 0.0;
  bool limit_flag = false;
};

/// Pointwise posterior at cutoff v_star and fidelity q.
///
/// Degenerate cases: alpha1 falls back to g(0) when F(v_star) = 0 and alpha2
/// to g(1) when F(v_star) = 1 (the continuous limits). A posterior whose
/// signal probability vanishes is assigned its fixed-cutoff limit (alpha2
/// for r0 at q=1, F=0; alpha1 for r1 at q=1, F=1) and flagged.
///
/// q is accepted on [0,1]; values below 1/2 arise only through the
/// reflection identity r0(q) = r1(1-q).
PosteriorPair posterior(const ValueDistribution& dist, const TypeModel& g,
                        double v_star, double q,
                        double quad_tol = kQuadratureTol);

/// r1 - r0, non-negative for q >= 1/2.
double posterior_gap(const ValueDistribution& dist, const TypeModel& g,
                     double v_star, double q);

/// Posterior along an equilibrium path q -> cutoff(q). Pointwise evaluation
/// except that a degenerate-signal posterior is replaced by its path limit,
/// obtained by Richardson extrapolation of evaluations at q-h and q-2h
/// (error O(h^2), so the q=1 row matches closed forms well past 1e-8).
PosteriorPair posterior_on_path(const ValueDistribution& dist,
                                const TypeModel& g,
                                const std::function<double(double)>& cutoff_of_q,
                                double q, double h = 1e-6);

}  // namespace privgame

#endif  // PRIVGAME_POSTERIOR_HPP_
