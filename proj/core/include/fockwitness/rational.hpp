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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fockwitness {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Exact quantities (binomial weights, separable
/// bounds, fidelity thresholds) are carried in this form and converted to
/// double only at the output boundary.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "3/2" for proper fractions, "2" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Exact binomial coefficient; 0 for k < 0 or k > n.
BigInt binomial_exact(int n, int k);

/// Best rational approximation of `x` by continued fractions, accepted only
/// if it reproduces `x` within `tol` with denominator at most `max_den`.
/// Used to attach exact-looking labels to values that were computed in
/// floating point; returns nullopt when no small fraction is that close.
std::optional<Rational> approximate_rational(double x, long long max_den = 1000000,
                                             double tol = 1e-9);

}  // namespace fockwitness
