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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fockwitness/errors.hpp"
#include "fockwitness/permanent.hpp"
#include "fockwitness/unitary.hpp"
#include "oracle.hpp"

using namespace fockwitness;
using fockwitness::testing::naive_permanent;
using fockwitness::testing::random_complex_matrix;

TEST_CASE("permanent of small closed forms") {
  Eigen::MatrixXcd a(2, 2);
  a << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-2, 1);
  // [[a,b],[c,d]] -> ad + bc
  CHECK(std::abs(permanent(a) - (a(0, 0) * a(1, 1) + a(0, 1) * a(1, 0))) < 1e-14);

  CHECK(std::abs(permanent(Eigen::MatrixXcd::Identity(5, 5)) - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(permanent(Eigen::MatrixXcd::Ones(3, 3)) - Complex(6, 0)) < 1e-12);
  CHECK(permanent(Eigen::MatrixXcd(0, 0)) == Complex(1, 0));

  CHECK_THROWS_AS(permanent(Eigen::MatrixXcd::Ones(2, 3)), std::domain_error);
}

TEST_CASE("permanent of DFT matrices matches frozen oracle values") {
  // Frozen from the permutation-sum oracle: perm(DFT_3) = -1/sqrt(3),
  // perm(DFT_4) = 0 (the latter is the uniform-input suppression at work).
  const Complex p3 = permanent(ModeUnitary::dft(3).transfer());
  CHECK(std::abs(p3 - Complex(-1.0 / std::sqrt(3.0), 0.0)) < 1e-12);
  const Complex p4 = permanent(ModeUnitary::dft(4).transfer());
  CHECK(std::abs(p4) < 1e-12);

  // And the oracle agrees, recomputed here.
  CHECK(std::abs(p3 - naive_permanent(ModeUnitary::dft(3).transfer())) < 1e-12);
  CHECK(std::abs(p4 - naive_permanent(ModeUnitary::dft(4).transfer())) < 1e-12);
}

TEST_CASE("Ryser agrees with the permutation-sum oracle on random matrices") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 6);  // 0..5
    const Eigen::MatrixXcd a = random_complex_matrix(n, rng);
    const Complex fast = permanent(a);
    const Complex slow = naive_permanent(a);
    CHECK(std::abs(fast - slow) <= 1e-10 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("permanent rejects infeasible orders") {
  CHECK_THROWS_AS(permanent(Eigen::MatrixXcd::Identity(63, 63)), resource_error);
}
