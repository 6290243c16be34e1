// Copyright 2026 The fockwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockwitness/rational.hpp"

#include <cmath>
#include <cstdint>

namespace fockwitness {

BigInt binomial_exact(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::optional<Rational> approximate_rational(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) {
    return std::nullopt;
  }
  // Continued-fraction convergents p/q of x.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = std::abs(x);
  for (int iter = 0; iter < 64; ++iter) {
    const double floor_part = std::floor(rest);
    if (floor_part > static_cast<double>(INT64_MAX / 4)) {
      break;
    }
    const auto a = static_cast<long long>(floor_part);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) {
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double value = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(value - std::abs(x)) <= tol) {
      Rational r(p1, q1);
      return x < 0 ? -r : r;
    }
    const double frac = rest - floor_part;
    if (frac < 1e-15) {
      break;
    }
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace fockwitness
