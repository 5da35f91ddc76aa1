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
#include "privgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

const char* to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kDiscriminatory:
      return "discriminatory";
    case EquilibriumKind::kUniformA:
      return "uniform_A";
    case EquilibriumKind::kUniformB:
      return "uniform_B";
  }
  return "?";
}

namespace {

PosteriorPair discriminatory_posteriors(const ValueDistribution& dist,
                                        const TypeModel& g, double delta,
                                        double q) {
  const auto cutoff_of_q = [&](double qq) {
    return discriminatory_price(dist, delta, qq).v_star;
  };
  return posterior_on_path(dist, g, cutoff_of_q, q);
}

bool near_eta(double r, double eta) { return std::abs(r - eta) <= kEtaTieTol; }

// Signed margin of the discriminatory condition: >= -kEtaTieTol iff the
// condition r1 >= eta and r0 <= eta holds weakly.
double discriminatory_margin(const ValueDistribution& dist, const TypeModel& g,
                             const GameParams& params, double q) {
  const PosteriorPair p =
      discriminatory_posteriors(dist, g, params.delta, q);
  const double eta = params.eta();
  return std::min(p.r1 - eta, eta - p.r0);
}

}  // namespace

EquilibriumPoint candidate_point(const ValueDistribution& dist,
                                 const TypeModel& g, const GameParams& params,
                                 EquilibriumKind kind, double q) {
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("candidate_point: q must lie in [1/2,1]");
  }
  EquilibriumPoint pt;
  pt.kind = kind;
  pt.q = q;
  const double eta = params.eta();
  if (kind == EquilibriumKind::kDiscriminatory) {
    const PricingSolution pricing = discriminatory_price(dist, params.delta, q);
    pt.price = pricing.p1;
    pt.cutoff = pricing.v_star;
    pt.posteriors = discriminatory_posteriors(dist, g, params.delta, q);
    pt.corner = pricing.corner;
    pt.p1_derivative = pricing.p1_derivative;
  } else {
    const double p_m = monopoly_price(dist);
    pt.price = p_m;
    pt.cutoff = p_m;
    pt.posteriors = posterior(dist, g, p_m, q);
  }
  pt.boundary_flag =
      near_eta(pt.posteriors.r1, eta) || near_eta(pt.posteriors.r0, eta);
  return pt;
}

std::vector<EquilibriumPoint> classify(const ValueDistribution& dist,
                                       const TypeModel& g,
                                       const GameParams& params, double q) {
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("classify: q must lie in [1/2,1]");
  }
  const double eta = params.eta();
  std::vector<EquilibriumPoint> found;

  // Discriminatory candidate: exists when the posterior separates across
  // eta. Both posteriors tying with eta is the degenerate-signal collapse
  // (q = 1/2 with prior at eta) and is not discriminatory.
  {
    const EquilibriumPoint pt = candidate_point(
        dist, g, params, EquilibriumKind::kDiscriminatory, q);
    const bool tie1 = near_eta(pt.posteriors.r1, eta);
    const bool tie0 = near_eta(pt.posteriors.r0, eta);
    const bool holds = pt.posteriors.r1 >= eta - kEtaTieTol &&
                       pt.posteriors.r0 <= eta + kEtaTieTol && !(tie1 && tie0);
    if (holds) found.push_back(pt);
  }

  // Uniform candidates: myopic behavior at the monopoly price.
  {
    EquilibriumPoint pt =
        candidate_point(dist, g, params, EquilibriumKind::kUniformA, q);
    const PosteriorPair& post = pt.posteriors;
    const bool holds_a =
        post.r1 >= eta - kEtaTieTol && post.r0 >= eta - kEtaTieTol;
    const bool holds_b =
        post.r1 <= eta + kEtaTieTol && post.r0 <= eta + kEtaTieTol;
    if (holds_a && holds_b) {
      // Both posteriors tie with eta; keep the side the mean posterior
      // points to so the two uniform kinds are never reported together.
      pt.kind = 0.5 * (post.r1 + post.r0) >= eta ? EquilibriumKind::kUniformA
                                                 : EquilibriumKind::kUniformB;
      pt.boundary_flag = true;
      found.push_back(pt);
    } else if (holds_a) {
      pt.kind = EquilibriumKind::kUniformA;
      found.push_back(pt);
    } else if (holds_b) {
      pt.kind = EquilibriumKind::kUniformB;
      found.push_back(pt);
    }
  }
  return found;
}

ExistenceBoundary uniform_boundary(const ValueDistribution& dist,
                                   const TypeModel& g,
                                   const GameParams& params,
                                   EquilibriumKind kind) {
  if (kind == EquilibriumKind::kDiscriminatory) {
    throw std::invalid_argument(
        "uniform_boundary: kind must be a uniform equilibrium kind");
  }
  const double eta = params.eta();
  const double prior = prior_t1(dist, g);
  const bool prior_above = prior > eta;
  if (kind == EquilibriumKind::kUniformA && !prior_above) {
    throw std::invalid_argument(
        "uniform_boundary: prior is below eta, uniform A never exists");
  }
  if (kind == EquilibriumKind::kUniformB && prior_above) {
    throw std::invalid_argument(
        "uniform_boundary: prior is above eta, uniform B never exists");
  }

  const double p_m = monopoly_price(dist);
  ExistenceBoundary boundary;
  boundary.kind = kind;
  boundary.side = kind == EquilibriumKind::kUniformA ? BindingSignal::kR0
                                                     : BindingSignal::kR1;
  // The binding posterior is monotone in q (r0 decreasing, r1 increasing),
  // so the kind exists on [1/2, q_bar] with q_bar the unique crossing.
  const auto margin = [&](double q) {
    const PosteriorPair p = posterior(dist, g, p_m, q);
    return kind == EquilibriumKind::kUniformA ? p.r0 - eta : eta - p.r1;
  };
  if (margin(1.0) >= 0.0) {
    boundary.entire_interval = true;
    boundary.q_bar = 1.0;
    return boundary;
  }
  boundary.entire_interval = false;
  boundary.q_bar = bisect(margin, 0.5, 1.0, 1e-12);
  return boundary;
}

std::vector<QInterval> discriminatory_intervals(const ValueDistribution& dist,
                                                const TypeModel& g,
                                                const GameParams& params,
                                                int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument(
        "discriminatory_intervals: need at least 2 grid points");
  }
  const int n = grid_points;
  std::vector<double> qs(n);
  std::vector<double> margins(n);
  for (int i = 0; i < n; ++i) {
    qs[i] = 0.5 + 0.5 * static_cast<double>(i) / (n - 1);
  }
  parallel_for(n, [&](std::size_t i) {
    margins[i] = discriminatory_margin(dist, g, params, qs[i]);
  });

  const auto holds = [&](double m) { return m >= -kEtaTieTol; };
  const auto refine = [&](double lo, double hi) {
    // Bisect the sign change of the margin to a q-resolution of 1e-6.
    const auto f = [&](double q) {
      return discriminatory_margin(dist, g, params, q);
    };
    return bisect(f, lo, hi, 1e-6, 80);
  };

  std::vector<QInterval> intervals;
  int i = 0;
  while (i < n) {
    if (!holds(margins[i])) {
      ++i;
      continue;
    }
    double lo = qs[i];
    if (i > 0) lo = refine(qs[i - 1], qs[i]);
    int j = i;
    while (j + 1 < n && holds(margins[j + 1])) ++j;
    double hi = qs[j];
    if (j + 1 < n) hi = refine(qs[j], qs[j + 1]);
    intervals.push_back({lo, hi});
    i = j + 1;
  }
  return intervals;
}

CutoffResponse best_response_cutoff(const GameParams& params,
                                    AdvertiserStrategy strategy, double price,
                                    double q, int grid_points) {
  if (!(price >= 0.0)) {
    throw std::invalid_argument("best_response_cutoff: price must be >= 0");
  }
  // Continuation utilities of buying / not buying under the ad rule.
  const double cont_buy =
      params.delta * (q * (ad_for_signal(strategy, 1) == Ad::kA ? 1.0 : 0.0) +
                      (1.0 - q) *
                          (ad_for_signal(strategy, 0) == Ad::kA ? 1.0 : 0.0));
  const double cont_not =
      params.delta *
      ((1.0 - q) * (ad_for_signal(strategy, 1) == Ad::kA ? 1.0 : 0.0) +
       q * (ad_for_signal(strategy, 0) == Ad::kA ? 1.0 : 0.0));

  CutoffResponse out;
  if (strategy == AdvertiserStrategy::kDiscriminate) {
    out.cutoff =
        std::min(1.0, std::max(0.0, price + (1.0 - 2.0 * q) * params.delta));
  } else {
    out.cutoff = price;  // myopic purchase at value = price
  }

  // Certify that {v : buy weakly preferred} is an upper interval.
  bool certified = true;
  bool seen_buy = false;
  for (int i = 0; i < grid_points; ++i) {
    const double v = static_cast<double>(i) / (grid_points - 1);
    const bool buys = (v - price) + cont_buy >= cont_not;
    if (seen_buy && !buys) {
      certified = false;
      break;
    }
    seen_buy = seen_buy || buys;
  }
  out.upper_interval_certified = certified;
  return out;
}

}  // namespace privgame
