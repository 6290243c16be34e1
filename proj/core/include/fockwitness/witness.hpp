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

#include <cstdint>

#include "fockwitness/rational.hpp"
#include "fockwitness/state.hpp"

namespace fockwitness {

// Entanglement evaluation for joint states on a fixed (N, M-N) photon
// partition. Two photon-counting experiments feed the criterion:
//
//   * counting in the original modes gives the complementary-pattern
//     correlation fidelity F_n and the pattern-class defect D_p;
//   * counting behind a DFT on both sides gives the K-correlation
//     fidelity F_K, the probability of K_A + K_B = 0 (mod M).
//
// Every separable state obeys F_n + F_K <= 1 + 1/min_p d_p (basic bound)
// and the tighter, statistics-aware form F_n - D_p + F_K <= 1. The witness
// value reported below is F_n - D_p + F_K - 1; any positive value certifies
// entanglement.

struct WitnessReport {
  int modes = 0;
  int photons_a = 0;
  int photons_b = 0;

  double fidelity_input = 0.0;   // F_n
  double fidelity_dft = 0.0;     // F_K
  double pattern_defect = 0.0;   // D_p

  double basic_bound = 0.0;      // 1 + 1/min_p d_p
  double optimized_lhs = 0.0;    // F_n - D_p + F_K
  double witness_value = 0.0;    // optimized_lhs - 1

  bool entangled_by_basic = false;      // F_n + F_K > basic_bound
  bool entangled_by_optimized = false;  // witness_value > 0
};

/// F_n: total probability of complementary pattern pairs (n, complement(n))
/// over single-occupancy n in the original modes.
double fidelity_input(const MixedEnsemble& state);
double fidelity_input(const PureState& state);

/// F_K: probability of K_A + K_B = 0 (mod M) after a DFT on both sides.
double fidelity_dft(const MixedEnsemble& state);
double fidelity_dft(const PureState& state);

/// D_p: sum over complementary class pairs of P(p, pbar) / d_p, where
/// P(p, pbar) is the input-basis probability mass on the class-pair
/// subspace. Only classes with single occupancy (so that the complementary
/// class exists) contribute.
double pattern_defect(const MixedEnsemble& state);
double pattern_defect(const PureState& state);

/// 1 + 1 / min_p d_p, minimized over all pattern classes of N photons in M
/// modes. Requires 1 <= N <= M-1.
Rational basic_bound(int modes, int photons_a);

WitnessReport evaluate(const MixedEnsemble& state);
WitnessReport evaluate(const PureState& state);

/// Report for the maximally mixed state on the (N, M-N) joint basis,
/// computed from exact counting rather than an ensemble sweep.
WitnessReport evaluate_uniform(int modes, int photons_a);

/// The witness as a dense Hermitian operator on the joint space, assembled
/// from the three correlation operators; tr(rho W) reproduces evaluate().
/// Its maximal eigenvalue is 1 - 1/M, reached by a maximally entangled
/// state inside a complementary class pair of full cardinality. Throws
/// resource_error when the joint dimension exceeds 4096.
Eigen::MatrixXcd witness_operator(int modes, int photons_a);

/// Largest eigenvalue of witness_operator.
double max_witness_eigenvalue(int modes, int photons_a);

/// Witness value of rho(p) = p * ideal + (1 - p) * uniform is affine in p:
/// slope * p + offset, crossing zero at `threshold`.
struct MixtureLaw {
  double slope = 0.0;
  double offset = 0.0;
  double threshold = 0.0;
};
MixtureLaw mixture_threshold(int modes, int photons_a);

/// State-fidelity levels that guarantee detection without any error model.
/// `basic` solves 2 F = basic_bound, assuming errors contribute nothing to
/// either fidelity. `tight` additionally lets the errors place all their
/// weight in the smallest complementary class, the worst case for the
/// defect-corrected criterion. Exact rationals; tight <= basic.
struct FidelityThresholds {
  Rational basic;
  Rational tight;
};
FidelityThresholds state_fidelity_thresholds(int modes, int photons_a);

/// Haar-like random product state: independent normalized complex-Gaussian
/// amplitude vectors on each side, tensored. Deterministic in `seed`.
PureState sample_product_state(const FockBasis& basis_a, const FockBasis& basis_b,
                               std::uint64_t seed);

}  // namespace fockwitness
