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
#include <limits>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {

constexpr int kBatches = 32;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Inverse-CDF sampling by bisection (tolerance 1e-12); works for any
// monotone CDF, including Custom ones with no closed-form inverse.
double inverse_cdf(const ValueDistribution& dist, double u) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (dist.cdf(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct BatchTotals {
  long long n = 0;
  long long buy = 0;
  long long joint[2][2] = {{0, 0}, {0, 0}};  // [type(0=t1,1=t2)][sig(0,1)]
  double cs_sum = 0.0, cs_sumsq = 0.0;
  double adv_sum = 0.0, adv_sumsq = 0.0;
};

double plugin_mi(const long long joint[2][2], long long n) {
  if (n <= 0) return kNan;
  double mi = 0.0;
  const double rows[2] = {
      static_cast<double>(joint[0][0] + joint[0][1]) / n,
      static_cast<double>(joint[1][0] + joint[1][1]) / n};
  const double cols[2] = {
      static_cast<double>(joint[0][0] + joint[1][0]) / n,
      static_cast<double>(joint[0][1] + joint[1][1]) / n};
  for (int t = 0; t < 2; ++t) {
    for (int s = 0; s < 2; ++s) {
      const double p = static_cast<double>(joint[t][s]) / n;
      if (p > 0.0) mi += p * std::log2(p / (rows[t] * cols[s]));
    }
  }
  return std::max(0.0, mi);
}

double binomial_se(double p, long long n) {
  if (n <= 0) return kNan;
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

double mean_se(double sum, double sumsq, long long n) {
  if (n <= 1) return kNan;
  const double mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace

SimReport simulate(const ValueDistribution& dist, const TypeModel& g,
                   const GameParams& params, double q,
                   const StrategyProfile& profile, long long n,
                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("simulate: q must lie in [1/2,1]");
  }

  const double payoff[2][2] = {  // [type][ad(0=A,1=B)]
      {params.s1A, params.s1B},
      {params.s2A, params.s2B}};
  const double ad_bonus[2] = {
      ad_for_signal(profile.ad_rule, 1) == Ad::kA ? params.delta : 0.0,
      ad_for_signal(profile.ad_rule, 0) == Ad::kA ? params.delta : 0.0};

  std::vector<BatchTotals> batches(kBatches);
  const long long per_batch = n / kBatches;

  parallel_for(kBatches, [&](std::size_t b) {
    const long long begin = static_cast<long long>(b) * per_batch;
    const long long end =
        b + 1 == kBatches ? n : begin + per_batch;  // last takes remainder
    BatchTotals& acc = batches[b];
    for (long long i = begin; i < end; ++i) {
      const std::uint64_t base = 3ull * static_cast<std::uint64_t>(i);
      const double u_value = uniform01_at(seed, base);
      const double u_type = uniform01_at(seed, base + 1);
      const double u_flip = uniform01_at(seed, base + 2);

      const double v = inverse_cdf(dist, u_value);
      const bool buys = v >= profile.cutoff;
      const int bit = buys ? 1 : 0;
      const int reported = u_flip < q ? bit : 1 - bit;
      const int type = u_type < g(v) ? 0 : 1;  // 0 = t1
      const Ad ad = ad_for_signal(profile.ad_rule, reported);

      acc.n += 1;
      acc.buy += buys ? 1 : 0;
      acc.joint[type][reported] += 1;
      const double cs = (buys ? v - profile.price : 0.0) +
                        (reported == 1 ? ad_bonus[0] : ad_bonus[1]);
      acc.cs_sum += cs;
      acc.cs_sumsq += cs * cs;
      const double adv = payoff[type][ad == Ad::kA ? 0 : 1];
      acc.adv_sum += adv;
      acc.adv_sumsq += adv * adv;
    }
  });

  // Combine in fixed batch order so totals are thread-count independent.
  BatchTotals total;
  std::vector<double> batch_mi;
  batch_mi.reserve(kBatches);
  for (const BatchTotals& b : batches) {
    total.n += b.n;
    total.buy += b.buy;
    for (int t = 0; t < 2; ++t) {
      for (int s = 0; s < 2; ++s) total.joint[t][s] += b.joint[t][s];
    }
    total.cs_sum += b.cs_sum;
    total.cs_sumsq += b.cs_sumsq;
    total.adv_sum += b.adv_sum;
    total.adv_sumsq += b.adv_sumsq;
    if (b.n > 0) batch_mi.push_back(plugin_mi(b.joint, b.n));
  }

  SimReport report;
  report.n = n;
  report.seed = seed;
  report.q = q;
  report.n_buy = total.buy;
  report.n_sig1 = total.joint[0][1] + total.joint[1][1];
  report.n_sig0 = total.joint[0][0] + total.joint[1][0];

  report.p_sig1 = static_cast<double>(report.n_sig1) / n;
  report.p_sig1_se = binomial_se(report.p_sig1, n);
  report.r1 = report.n_sig1 > 0
                  ? static_cast<double>(total.joint[0][1]) / report.n_sig1
                  : kNan;
  report.r1_se = binomial_se(report.r1, report.n_sig1);
  report.r0 = report.n_sig0 > 0
                  ? static_cast<double>(total.joint[0][0]) / report.n_sig0
                  : kNan;
  report.r0_se = binomial_se(report.r0, report.n_sig0);

  report.consumer_surplus = total.cs_sum / n;
  report.consumer_surplus_se = mean_se(total.cs_sum, total.cs_sumsq, n);
  const double buy_rate = static_cast<double>(total.buy) / n;
  report.seller_profit = profile.price * buy_rate;
  report.seller_profit_se = profile.price * binomial_se(buy_rate, n);
  report.advertiser_utility = total.adv_sum / n;
  report.advertiser_utility_se = mean_se(total.adv_sum, total.adv_sumsq, n);

  report.mi_bits = plugin_mi(total.joint, n);
  if (batch_mi.size() > 1) {
    double mean = 0.0;
    for (double m : batch_mi) mean += m;
    mean /= batch_mi.size();
    double var = 0.0;
    for (double m : batch_mi) var += (m - mean) * (m - mean);
    var /= (batch_mi.size() - 1.0);
    report.mi_bits_se = std::sqrt(var / batch_mi.size());
  } else {
    report.mi_bits_se = kNan;
  }
  return report;
}

std::vector<SimReport> convergence_sweep(const ValueDistribution& dist,
                                         const TypeModel& g,
                                         const GameParams& params, double q,
                                         const StrategyProfile& profile,
                                         const std::vector<long long>& ns,
                                         std::uint64_t seed) {
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] <= ns[i - 1]) {
      throw std::invalid_argument("convergence_sweep: ns must be ascending");
    }
  }
  std::vector<SimReport> reports;
  reports.reserve(ns.size());
  for (long long n : ns) {
    reports.push_back(simulate(dist, g, params, q, profile, n, seed));
  }
  return reports;
}

}  // namespace privgame
