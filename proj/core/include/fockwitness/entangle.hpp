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

#include <vector>

#include "fockwitness/rational.hpp"
#include "fockwitness/state.hpp"

namespace fockwitness {

/// Joint pure state of two M-mode systems sharing M photons in total, with
/// a variable split of photons between the sides. Stored sparsely per
/// (N_A, M - N_A) stratum; indices refer to the canonical FockBasis of each
/// side. Relative phases between strata are kept even though photon
/// counting never reveals them, so the projection identity can be tested
/// instead of assumed.
class StratifiedState {
 public:
  struct Term {
    size_t index_a;
    size_t index_b;
    Complex amplitude;
  };
  struct Stratum {
    int photons_a;
    std::vector<Term> terms;
  };

  StratifiedState(int modes, std::vector<Stratum> strata);

  int modes() const { return modes_; }
  const std::vector<Stratum>& strata() const { return strata_; }

  FockBasis basis_a(int photons_a) const { return FockBasis(modes_, photons_a); }
  FockBasis basis_b(int photons_a) const { return FockBasis(modes_, modes_ - photons_a); }

  double norm() const;

  /// Probability of finding photons_a photons on side A (squared stratum norm).
  double stratum_probability(int photons_a) const;

  /// Renormalized dense joint state of one stratum. Throws std::domain_error
  /// when the stratum carries no amplitude, resource_error when the dense
  /// block would be unreasonably large.
  PureState project(int photons_a) const;

  Complex joint_amplitude(const PhotonPattern& n_a, const PhotonPattern& n_b) const;
  double joint_probability(const PhotonPattern& n_a, const PhotonPattern& n_b) const;

 private:
  int modes_;
  std::vector<Stratum> strata_;  // sorted by photons_a
};

/// The state produced by splitting M single photons towards two M-mode
/// ports: an equal superposition, with amplitude 2^{-M/2}, of every pair
/// (n, complement(n)) over single-occupancy patterns n. Supported for
/// 1 <= M <= 12 (2^M terms); larger M throws resource_error.
StratifiedState generate_psi(int modes);

/// Cross-validation route for generate_psi: places one photon in each of M
/// input modes, applies M explicit 50/50 splitters as one 2M-mode unitary,
/// and reads the output back as an A/B joint state. Exponentially more
/// expensive; intended for modest M.
StratifiedState generate_psi_via_splitters(int modes);

/// Probability binomial(M, N) / 2^M of the photon split (N, M - N), exact.
Rational partition_probability(int modes, int photons_at_a);

/// Large-M Gaussian approximation sqrt(2 / (pi M)) * exp(-2 (N - M/2)^2 / M).
double gaussian_partition_estimate(int modes, int photons_at_a);

/// The normalized post-selected state with N photons at A and M - N at B:
/// amplitude 1 / sqrt(binomial(M, N)) on every pair (n, complement(n)) with
/// single-occupancy n, zero elsewhere. Equals projecting generate_psi onto
/// the stratum. N = 0 and N = M give the two one-term separable states.
PureState phi_partition(int modes, int photons_at_a);

/// Number of singular values of the joint amplitude matrix above `tol`.
int schmidt_rank(const PureState& joint_state, double tol = 1e-10);

/// Rank of a multi-stratum state: strata occupy disjoint row and column
/// blocks, so the ranks add.
int schmidt_rank(const StratifiedState& state, double tol = 1e-10);

}  // namespace fockwitness
