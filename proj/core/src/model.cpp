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
#include <sstream>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

ValueDistribution ValueDistribution::uniform01() {
  ValueDistribution d;
  d.kind_ = DistKind::kUniform01;
  d.cdf_ = [](double v) { return v; };
  d.density_ = [](double) { return 1.0; };
  d.inverse_hazard_ = [](double v) { return 1.0 - v; };
  d.label_ = "uniform";
  return d;
}

ValueDistribution ValueDistribution::trunc_exp(double rate) {
  if (rate == 0.0 || !std::isfinite(rate)) {
    throw std::invalid_argument("trunc_exp: rate must be finite and nonzero");
  }
  ValueDistribution d;
  d.kind_ = DistKind::kTruncExp;
  const double norm = std::expm1(rate);  // e^rate - 1
  d.cdf_ = [rate, norm](double v) { return std::expm1(rate * v) / norm; };
  d.density_ = [rate, norm](double v) {
    return rate * std::exp(rate * v) / norm;
  };
  // I(v) = (e^{rate(1-v)} - 1)/rate, valid for either sign of rate.
  d.inverse_hazard_ = [rate](double v) {
    return std::expm1(rate * (1.0 - v)) / rate;
  };
  std::ostringstream label;
  label << "trunc_exp(" << rate << ")";
  d.label_ = label.str();
  return d;
}

ValueDistribution ValueDistribution::power_cdf(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("power_cdf: exponent must be positive");
  }
  ValueDistribution d;
  d.kind_ = DistKind::kPowerCdf;
  const double k = exponent;
  d.cdf_ = [k](double v) { return std::pow(v, k); };
  d.density_ = [k](double v) { return k * std::pow(v, k - 1.0); };
  d.inverse_hazard_ = [k](double v) {
    const double f = k * std::pow(v, k - 1.0);
    if (f == 0.0) return kInf;
    return (1.0 - std::pow(v, k)) / f;
  };
  std::ostringstream label;
  label << "power(" << k << ")";
  d.label_ = label.str();
  return d;
}

ValueDistribution ValueDistribution::custom(
    std::function<double(double)> cdf, std::function<double(double)> density,
    std::function<double(double)> inverse_hazard,
    std::vector<double> breakpoints, std::string label) {
  ValueDistribution d;
  d.kind_ = DistKind::kCustom;
  d.cdf_ = std::move(cdf);
  d.density_ = std::move(density);
  d.inverse_hazard_ = std::move(inverse_hazard);
  d.breakpoints_ = std::move(breakpoints);
  d.label_ = std::move(label);
  return d;
}

TypeModel TypeModel::identity() {
  TypeModel t;
  t.kind_ = TypeModelKind::kIdentity;
  t.g_ = [](double v) { return v; };
  t.label_ = "identity";
  return t;
}

TypeModel TypeModel::step(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("step: threshold must lie in [0,1]");
  }
  TypeModel t;
  t.kind_ = TypeModelKind::kStep;
  t.g_ = [threshold](double v) { return v >= threshold ? 1.0 : 0.0; };
  t.breakpoints_ = {threshold};
  std::ostringstream label;
  label << "step(" << threshold << ")";
  t.label_ = label.str();
  return t;
}

TypeModel TypeModel::affine(double a, double b) {
  TypeModel t;
  t.kind_ = TypeModelKind::kAffine;
  t.g_ = [a, b](double v) { return a + b * v; };
  std::ostringstream label;
  label << "affine(" << a << "," << b << ")";
  t.label_ = label.str();
  return t;
}

TypeModel TypeModel::custom(std::function<double(double)> g,
                            std::vector<double> breakpoints,
                            std::string label) {
  TypeModel t;
  t.kind_ = TypeModelKind::kCustom;
  t.g_ = std::move(g);
  t.breakpoints_ = std::move(breakpoints);
  t.label_ = std::move(label);
  return t;
}

double q_from_epsilon(double epsilon) {
  if (std::isnan(epsilon) || epsilon < 0.0) {
    throw std::invalid_argument("q_from_epsilon: epsilon must be >= 0");
  }
  if (std::isinf(epsilon)) return 1.0;
  // 1/(1 + e^-eps) avoids overflow for large eps.
  return 1.0 / (1.0 + std::exp(-epsilon));
}

double epsilon_from_q(double q) {
  if (!(q >= 0.5 && q <= 1.0)) {
    throw std::invalid_argument("epsilon_from_q: q must lie in [1/2,1]");
  }
  if (q == 1.0) return kInf;
  return std::log(q / (1.0 - q));
}

PrivacyLevel PrivacyLevel::from_epsilon(double epsilon) {
  return PrivacyLevel(q_from_epsilon(epsilon), epsilon);
}

PrivacyLevel PrivacyLevel::from_q(double q) {
  return PrivacyLevel(q, epsilon_from_q(q));
}

const char* to_string(AdvertiserStrategy s) {
  switch (s) {
    case AdvertiserStrategy::kDiscriminate:
      return "discriminate";
    case AdvertiserStrategy::kAlwaysA:
      return "always_A";
    case AdvertiserStrategy::kAlwaysB:
      return "always_B";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.check;
    if (!std::isnan(v.grid_point)) out << " at v=" << v.grid_point;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  return out.str();
}

namespace {

void add_violation(ValidationReport& report, const std::string& check,
                   double point, const std::string& detail) {
  report.violations.push_back({check, point, detail});
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(9);
  s << x;
  return s.str();
}

}  // namespace

ValidationReport validate(const ValueDistribution& dist, const TypeModel& g,
                          const GameParams& params, int grid_size) {
  if (grid_size < 8) {
    throw std::invalid_argument("validate: grid_size must be >= 8");
  }
  ValidationReport report;
  const int n = grid_size;
  const double kEndpointTol = 1e-9;
  const double kMonotoneTol = 1e-12;
  const double kConsistencyTol = 1e-8;

  if (std::abs(dist.cdf(0.0)) > kEndpointTol) {
    add_violation(report, "cdf(0)=0", 0.0, "got " + num(dist.cdf(0.0)));
  }
  if (std::abs(dist.cdf(1.0) - 1.0) > kEndpointTol) {
    add_violation(report, "cdf(1)=1", 1.0, "got " + num(dist.cdf(1.0)));
  }

  double prev_cdf = dist.cdf(0.0);
  double prev_ih = kInf;
  double prev_g = -kInf;
  bool cdf_flag = false, ih_flag = false, g_flag = false;
  for (int i = 0; i <= n; ++i) {
    const double v = static_cast<double>(i) / n;
    const double F = dist.cdf(v);
    const double f = dist.density(v);
    const double gv = g(v);

    if (i > 0 && !cdf_flag && F < prev_cdf - kMonotoneTol) {
      add_violation(report, "cdf non-decreasing", v,
                    num(F) + " < " + num(prev_cdf));
      cdf_flag = true;  // report the first offending point only
    }
    prev_cdf = F;

    if (i > 0 && i < n && f < -kMonotoneTol) {
      add_violation(report, "density >= 0", v, "got " + num(f));
      break;
    }

    // Inverse hazard is defined on [0,1); skip the right endpoint. Infinite
    // values (vanishing density) are admissible and compare correctly.
    if (i < n) {
      const double ih = dist.inverse_hazard(v);
      if (std::isnan(ih) || ih < -kMonotoneTol) {
        add_violation(report, "inverse_hazard >= 0", v, "got " + num(ih));
      }
      if (!ih_flag && ih > prev_ih + kMonotoneTol &&
          !(std::isinf(ih) && std::isinf(prev_ih))) {
        add_violation(report, "hazard non-decreasing", v,
                      "inverse hazard rises from " + num(prev_ih) + " to " +
                          num(ih));
        ih_flag = true;
      }
      prev_ih = ih;
      if (std::isfinite(ih) && f > 1e-12) {
        const double lhs = ih * f;
        const double rhs = 1.0 - F;
        if (std::abs(lhs - rhs) > kConsistencyTol) {
          add_violation(report, "inverse_hazard*density = 1-cdf", v,
                        num(lhs) + " vs " + num(rhs));
        }
      }
    }

    if (gv < -kMonotoneTol || gv > 1.0 + kMonotoneTol) {
      add_violation(report, "g in [0,1]", v, "got " + num(gv));
    }
    if (!g_flag && gv < prev_g - kMonotoneTol) {
      add_violation(report, "g non-decreasing", v,
                    num(gv) + " < " + num(prev_g));
      g_flag = true;
    }
    prev_g = gv;
  }

  if (!(params.delta > 0.0)) {
    add_violation(report, "delta > 0", kNan, "got " + num(params.delta));
  }
  if (!(params.s1A > params.s1B)) {
    add_violation(report, "s1A > s1B", kNan,
                  num(params.s1A) + " vs " + num(params.s1B));
  }
  if (!(params.s2B > params.s2A)) {
    add_violation(report, "s2B > s2A", kNan,
                  num(params.s2B) + " vs " + num(params.s2A));
  }
  const double eta = params.eta();
  if (!(eta > 0.0 && eta < 1.0)) {
    add_violation(report, "eta in (0,1)", kNan, "got " + num(eta));
  }
  return report;
}

double prior_t1(const ValueDistribution& dist, const TypeModel& g,
                double quad_tol) {
  std::vector<double> cuts = dist.breakpoints();
  cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
  const double p = integrate(
      [&](double v) { return g(v) * dist.density(v); }, 0.0, 1.0, quad_tol,
      cuts);
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw std::runtime_error("prior_t1: quadrature left [0,1]: " + num(p));
  }
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace privgame
