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
#ifndef PRIVGAME_NUMERIC_HPP_
#define PRIVGAME_NUMERIC_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace privgame {

/// Bracketed bisection for a sign-changing continuous function on [lo, hi].
/// Requires f(lo) and f(hi) to have opposite (or zero) sign; throws
/// std::runtime_error otherwise. Stops when the bracket width falls below
/// `tol` and returns the bracket midpoint.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-13, int max_iter = 200);

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance.
/// `breakpoints` lists interior abscissae where the integrand may be
/// non-smooth (e.g. a step); the interval is split there before adapting.
/// Throws std::runtime_error if the recursion depth limit is hit before the
/// tolerance is met (non-convergence).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11,
                 const std::vector<double>& breakpoints = {});

/// Runs body(i) for i in [0, n), possibly on several threads. Results must
/// be written to disjoint slots so the outcome is order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// splitmix64 finalizer: the i-th output of the stream seeded by `seed` is
/// mix64(seed + (i+1)*kGolden). Random access makes sharded simulation
/// reproduce the serial stream exactly.
inline constexpr std::uint64_t kSplitmixGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform double in [0,1) from the `index`-th element of stream `seed`.
inline double uniform01_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = mix64(seed + (index + 1) * kSplitmixGolden);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace privgame

#endif  // PRIVGAME_NUMERIC_HPP_
