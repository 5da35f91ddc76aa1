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
#include "privgame/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {

std::vector<double> merged_breakpoints(const ValueDistribution& dist,
                                       const TypeModel& g) {
  std::vector<double> cuts = dist.breakpoints();
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  return cuts;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

PosteriorPair posterior(const ValueDistribution& dist, const TypeModel& g,
                        double v_star, double q, double quad_tol) {
  if (!(v_star >= 0.0 && v_star <= 1.0)) {
    throw std::invalid_argument("posterior: v_star must lie in [0,1]");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("posterior: q must lie in [0,1]");
  }
  const auto cuts = merged_breakpoints(dist, g);
  const auto gf = [&](double v) { return g(v) * dist.density(v); };
  const double below = integrate(gf, 0.0, v_star, quad_tol, cuts);
  const double above = integrate(gf, v_star, 1.0, quad_tol, cuts);
  const double F = dist.cdf(v_star);
  const double notF = 1.0 - F;

  PosteriorPair out;
  out.alpha1 = F > 0.0 ? clamp01(below / F) : clamp01(g(0.0));
  out.alpha2 = notF > 0.0 ? clamp01(above / notF) : clamp01(g(1.0));
  out.p_sig1 = (1.0 - q) * F + q * notF;
  out.p_sig0 = q * F + (1.0 - q) * notF;

  if (out.p_sig1 >= kSignalProbFloor) {
    out.r1 = clamp01(((1.0 - q) * below + q * above) / out.p_sig1);
  } else {
    // Only reachable at q=1 with F(v_star)=1: all mass reports 0.
    out.r1 = out.alpha1;
    out.limit_flag = true;
  }
  if (out.p_sig0 >= kSignalProbFloor) {
    out.r0 = clamp01((q * below + (1.0 - q) * above) / out.p_sig0);
  } else {
    // Only reachable at q=1 with F(v_star)=0: all mass reports 1.
    out.r0 = out.alpha2;
    out.limit_flag = true;
  }
  return out;
}

double posterior_gap(const ValueDistribution& dist, const TypeModel& g,
                     double v_star, double q) {
  const PosteriorPair p = posterior(dist, g, v_star, q);
  return p.r1 - p.r0;
}

PosteriorPair posterior_on_path(
    const ValueDistribution& dist, const TypeModel& g,
    const std::function<double(double)>& cutoff_of_q, double q, double h) {
  PosteriorPair point = posterior(dist, g, cutoff_of_q(q), q);
  if (!point.limit_flag) return point;

  const PosteriorPair near = posterior(dist, g, cutoff_of_q(q - h), q - h);
  const PosteriorPair far =
      posterior(dist, g, cutoff_of_q(q - 2.0 * h), q - 2.0 * h);
  if (point.p_sig0 < kSignalProbFloor) {
    point.r0 = clamp01(2.0 * near.r0 - far.r0);
  }
  if (point.p_sig1 < kSignalProbFloor) {
    point.r1 = clamp01(2.0 * near.r1 - far.r1);
  }
  return point;
}

}  // namespace privgame
