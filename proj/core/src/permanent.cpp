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

#include "fockwitness/permanent.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "fockwitness/errors.hpp"

namespace fockwitness {

// Ryser:  perm(A) = (-1)^n * sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} A(i, j).
// The subsets S are walked in Gray-code order so each step toggles a single
// column in the running row sums.
std::complex<double> permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw std::domain_error("permanent requires a square matrix");
  }
  const int n = static_cast<int>(a.rows());
  if (n == 0) {
    return {1.0, 0.0};
  }
  if (n > 62) {
    throw resource_error("permanent of order " + std::to_string(n) + " is infeasible");
  }

  std::vector<std::complex<double>> row_sums(static_cast<size_t>(n), {0.0, 0.0});
  std::complex<double> total{0.0, 0.0};
  uint64_t gray = 0;
  int parity = 1;  // (-1)^{|S|} of the current subset

  const uint64_t count = uint64_t{1} << n;
  for (uint64_t k = 1; k < count; ++k) {
    const int j = std::countr_zero(k);
    const uint64_t bit = uint64_t{1} << j;
    gray ^= bit;
    const double sign = (gray & bit) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
      row_sums[static_cast<size_t>(i)] += sign * a(i, j);
    }
    parity = -parity;

    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      prod *= row_sums[static_cast<size_t>(i)];
    }
    total += static_cast<double>(parity) * prod;
  }

  return (n % 2 == 0) ? total : -total;
}

}  // namespace fockwitness
