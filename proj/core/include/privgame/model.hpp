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
// Game primitives: the buyer-value distribution on [0,1], the value-to-type
// map g, advertiser payoffs, and the randomized-response privacy level.
#ifndef PRIVGAME_MODEL_HPP_
#define PRIVGAME_MODEL_HPP_

#include <functional>
#include <string>
#include <vector>

namespace privgame {

// Shared tolerances.
inline constexpr double kEtaTieTol = 1e-9;      // posterior-vs-eta tie band
inline constexpr double kSignalProbFloor = 1e-12;  // degenerate conditioning
inline constexpr double kQuadratureTol = 1e-11;    // per-integral abs tol
inline constexpr double kRootTol = 1e-15;          // bisection bracket width
inline constexpr double kEpsilonCap = 36.0;        // CSV epsilon cap

enum class DistKind { kUniform01, kTruncExp, kPowerCdf, kCustom };

/// Absolutely continuous buyer-value law on [0,1] with CDF F, density f and
/// inverse hazard I(v) = (1-F(v))/f(v).
///
/// TruncExp(rate) is the exponential-family density
///   f(v) = rate * exp(rate*v) / (exp(rate) - 1)
/// renormalized to [0,1]. Positive rates tilt mass toward 1; negative rates
/// give the decaying exponential truncated to [0,1], whose inverse hazard is
/// nearly flat for large |rate| (the near-constant-hazard regime).
class ValueDistribution {
 public:
  static ValueDistribution uniform01();
  static ValueDistribution trunc_exp(double rate);
  static ValueDistribution power_cdf(double exponent);
  /// Black-box law; `breakpoints` marks interior non-smooth abscissae used to
  /// split quadrature and grid checks.
  static ValueDistribution custom(std::function<double(double)> cdf,
                                  std::function<double(double)> density,
                                  std::function<double(double)> inverse_hazard,
                                  std::vector<double> breakpoints = {},
                                  std::string label = "custom");

  double cdf(double v) const { return cdf_(v); }
  double density(double v) const { return density_(v); }
  double inverse_hazard(double v) const { return inverse_hazard_(v); }

  DistKind kind() const { return kind_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::string& label() const { return label_; }

 private:
  ValueDistribution() = default;

  DistKind kind_ = DistKind::kCustom;
  std::function<double(double)> cdf_;
  std::function<double(double)> density_;
  std::function<double(double)> inverse_hazard_;
  std::vector<double> breakpoints_;
  std::string label_;
};

enum class TypeModelKind { kIdentity, kStep, kAffine, kCustom };

/// Non-decreasing map g(v) = Pr(type t1 | value v) on [0,1].
class TypeModel {
 public:
  static TypeModel identity();
  static TypeModel step(double threshold);  // 0 below threshold, 1 at/above
  static TypeModel affine(double a, double b);  // g(v) = a + b*v
  static TypeModel custom(std::function<double(double)> g,
                          std::vector<double> breakpoints = {},
                          std::string label = "custom");

  double operator()(double v) const { return g_(v); }

  TypeModelKind kind() const { return kind_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::string& label() const { return label_; }

 private:
  TypeModel() = default;

  TypeModelKind kind_ = TypeModelKind::kCustom;
  std::function<double(double)> g_;
  std::vector<double> breakpoints_;
  std::string label_;
};

/// Ad bonus delta and the advertiser's four payoffs. eta() is the posterior
/// threshold above which showing ad A is the advertiser's best response.
struct GameParams {
  double delta = 1.0;
  double s1A = 1.0;
  double s2A = 0.0;
  double s1B = 0.0;
  double s2B = 1.0;

  double eta() const {
    return (s2B - s2A) / (s1A - s2A - s1B + s2B);
  }
};

/// Conversion between channel fidelity q in [1/2,1] and the epsilon of the
/// differential-privacy guarantee q/(1-q) = e^epsilon. epsilon = infinity is
/// represented explicitly so q = 1 is exact.
double q_from_epsilon(double epsilon);  // rejects epsilon < 0
double epsilon_from_q(double q);        // rejects q outside [1/2,1]

/// Carries both parameters so conversions stay exact at the endpoints and at
/// large epsilon, where the map to q is not invertible in double precision.
class PrivacyLevel {
 public:
  static PrivacyLevel from_epsilon(double epsilon);
  static PrivacyLevel from_q(double q);

  double q() const { return q_; }
  double epsilon() const { return epsilon_; }
  bool no_privacy() const { return q_ == 1.0; }

 private:
  PrivacyLevel(double q, double epsilon) : q_(q), epsilon_(epsilon) {}
  double q_;
  double epsilon_;
};

/// Binary symmetric channel: the reported bit equals the true purchase bit
/// with probability q.
struct SignalChannel {
  double q;
  double pr_report(int reported, int actual) const {
    return reported == actual ? q : 1.0 - q;
  }
};

enum class Ad { kA, kB };
enum class ConsumerType { kT1, kT2 };

/// The three advertiser strategies that can arise in equilibrium.
enum class AdvertiserStrategy { kDiscriminate, kAlwaysA, kAlwaysB };

inline Ad ad_for_signal(AdvertiserStrategy s, int signal_bit) {
  switch (s) {
    case AdvertiserStrategy::kDiscriminate:
      return signal_bit == 1 ? Ad::kA : Ad::kB;
    case AdvertiserStrategy::kAlwaysA:
      return Ad::kA;
    case AdvertiserStrategy::kAlwaysB:
      return Ad::kB;
  }
  return Ad::kB;
}

const char* to_string(AdvertiserStrategy s);

struct Violation {
  std::string check;
  double grid_point;  // NaN when not tied to a point
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Grid-based check of the standing assumptions: F is a CDF with
/// non-negative density and non-decreasing hazard (inverse hazard
/// non-increasing, consistent with f and F), g maps into [0,1] and is
/// non-decreasing, delta > 0, s1A > s1B, s2B > s2A, and eta lies in (0,1).
ValidationReport validate(const ValueDistribution& dist, const TypeModel& g,
                          const GameParams& params, int grid_size = 1024);

/// Prior probability of type t1: the quadrature of g(v) f(v) over [0,1].
double prior_t1(const ValueDistribution& dist, const TypeModel& g,
                double quad_tol = kQuadratureTol);

}  // namespace privgame

#endif  // PRIVGAME_MODEL_HPP_
