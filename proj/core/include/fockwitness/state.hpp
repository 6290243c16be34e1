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
#include <optional>
#include <utility>
#include <vector>

#include "fockwitness/basis.hpp"

namespace fockwitness {

using Complex = std::complex<double>;

/// A normalizable state vector over one Fock basis (local) or over the
/// tensor product of two Fock bases (joint). Joint amplitudes are stored
/// flat with index  ia * size_b + ib.
///
/// Instances are immutable after construction.
class PureState {
 public:
  static PureState local(FockBasis basis, Eigen::VectorXcd amplitudes);
  static PureState joint(FockBasis basis_a, FockBasis basis_b, Eigen::VectorXcd amplitudes);
  static PureState joint_from_matrix(FockBasis basis_a, FockBasis basis_b,
                                     const Eigen::MatrixXcd& amplitudes);

  /// Basis vector |n>.
  static PureState basis_state(const FockBasis& basis, const PhotonPattern& n);
  /// Product basis vector |n_a>|n_b>.
  static PureState joint_basis_state(const FockBasis& basis_a, const FockBasis& basis_b,
                                     const PhotonPattern& n_a, const PhotonPattern& n_b);

  bool is_joint() const { return basis_b_.has_value(); }
  const FockBasis& basis_a() const { return basis_a_; }
  const FockBasis& basis_b() const;

  Eigen::Index dim() const { return amp_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Complex amplitude(Eigen::Index flat_index) const { return amp_(flat_index); }
  Complex amplitude(Eigen::Index index_a, Eigen::Index index_b) const;

  /// Joint amplitudes as a size_a x size_b matrix (row = A index).
  Eigen::MatrixXcd amplitude_matrix() const;

  double norm() const { return amp_.norm(); }
  PureState normalized() const;

 private:
  PureState(FockBasis basis_a, std::optional<FockBasis> basis_b, Eigen::VectorXcd amp);

  FockBasis basis_a_;
  std::optional<FockBasis> basis_b_;
  Eigen::VectorXcd amp_;
};

/// |a> tensor |b> of two local states; amplitudes multiply.
PureState tensor(const PureState& a, const PureState& b);

/// |<n_a n_b|psi>|^2. Throws std::domain_error if a pattern does not belong
/// to the respective basis.
double joint_probability(const PureState& state, const PhotonPattern& n_a,
                         const PhotonPattern& n_b);

/// A probabilistic mixture of pure states sharing one basis structure.
/// Weights are renormalized to sum to one. Kept as an ensemble; the dense
/// density matrix is only ever formed inside small operator checks.
class MixedEnsemble {
 public:
  using Component = std::pair<double, PureState>;

  explicit MixedEnsemble(std::vector<Component> components);

  static MixedEnsemble from_pure(PureState psi);

  /// The maximally mixed state on basis_a tensor basis_b, as an ensemble of
  /// all joint basis states. Guarded: throws resource_error when the joint
  /// dimension exceeds 4096 (use the analytic uniform-state paths instead).
  static MixedEnsemble uniform_joint(const FockBasis& basis_a, const FockBasis& basis_b);

  const std::vector<Component>& components() const { return components_; }
  size_t size() const { return components_.size(); }

  bool is_joint() const { return components_.front().second.is_joint(); }
  const FockBasis& basis_a() const { return components_.front().second.basis_a(); }
  const FockBasis& basis_b() const { return components_.front().second.basis_b(); }

 private:
  std::vector<Component> components_;
};

/// Ensemble constructor with the renormalization contract spelled out.
MixedEnsemble mix(std::vector<std::pair<double, PureState>> components);

double joint_probability(const MixedEnsemble& state, const PhotonPattern& n_a,
                         const PhotonPattern& n_b);

}  // namespace fockwitness
