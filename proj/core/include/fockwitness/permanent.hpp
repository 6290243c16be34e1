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

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace fockwitness {

/// Permanent of a square complex matrix by Ryser's inclusion-exclusion
/// formula with Gray-code subset updates, O(2^n * n) time.
///
/// perm of the empty 0x0 matrix is 1. Throws std::domain_error for
/// non-square input and resource_error for n > 62.
///
/// The summation order is fixed, so repeated evaluations are bit-identical.
std::complex<double> permanent(const Eigen::MatrixXcd& a);

}  // namespace fockwitness
