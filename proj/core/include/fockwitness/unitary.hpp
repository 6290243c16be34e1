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

#include "fockwitness/basis.hpp"
#include "fockwitness/state.hpp"

namespace fockwitness {

/// An M x M unitary acting on the modes. Entry t(k, m) is the single-photon
/// amplitude from input mode m to output mode k: applying the box maps
/// |m> to sum_k t(k, m) |k>.
class ModeUnitary {
 public:
  /// Validates squareness and unitarity (per-entry residual <= 1e-10).
  explicit ModeUnitary(Eigen::MatrixXcd transfer);

  static ModeUnitary identity(int modes);

  /// The discrete Fourier transform, t(k, m) = exp(+i 2 pi k m / M) / sqrt(M).
  /// All entries have squared modulus 1/M. The exponent sign is tied to the
  /// mode-shift eigenvalue convention: shifting the modes before this box
  /// multiplies the amplitude of output pattern n by exp(+i 2 pi K(n) / M),
  /// with K(n) the output pattern's modular mode-index sum. The tests pin
  /// this relation entrywise.
  static ModeUnitary dft(int modes);

  /// Cyclic shift m -> m + 1 (mod M) as a permutation matrix.
  static ModeUnitary mode_shift(int modes);

  /// The symmetric 50/50 two-mode splitter [[1, 1], [1, -1]] / sqrt(2).
  static ModeUnitary balanced_splitter();

  int modes() const { return static_cast<int>(t_.rows()); }
  const Eigen::MatrixXcd& transfer() const { return t_; }

  ModeUnitary adjoint() const;

  /// Composition: apply `rhs` first, then `lhs`.
  friend ModeUnitary operator*(const ModeUnitary& lhs, const ModeUnitary& rhs);

 private:
  struct unchecked_tag {};
  ModeUnitary(Eigen::MatrixXcd transfer, unchecked_tag) : t_(std::move(transfer)) {}

  Eigen::MatrixXcd t_;
};

/// A mode unitary lifted to the N-photon Fock space of a basis, materialized
/// as the dense D x D matrix in the basis order. Column j is the image of
/// basis state j.
class FockUnitary {
 public:
  FockUnitary(FockBasis basis, Eigen::MatrixXcd entries);

  const FockBasis& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  FockBasis basis_;
  Eigen::MatrixXcd m_;
};

/// Multi-photon transition amplitude <out| U |in>. Equals
/// perm(U_sub) / sqrt(prod_k out_k! * prod_m in_m!), where U_sub repeats
/// row k out_k times and column m in_m times. Returns 0 when the photon
/// numbers differ (linear optics conserves the total photon number).
Complex fock_amplitude(const ModeUnitary& u, const PhotonPattern& out, const PhotonPattern& in);

/// Image of basis state |in> under the lift of `u`, as a column over `basis`.
Eigen::VectorXcd lift_column(const ModeUnitary& u, const FockBasis& basis,
                             const PhotonPattern& in);

/// Materializes the full lifted matrix. Intended for tests, operator
/// assembly and modest dimensions; apply() below avoids materialization on
/// larger spaces.
FockUnitary lift(const ModeUnitary& u, const FockBasis& basis);

enum class Side { A, B, Both };

/// Applies the Fock-space lift of `u` to a state. For joint states `side`
/// selects the subsystem(s); a local state only accepts Side::A. Norm is
/// preserved. Sides whose dimension exceeds `materialize_limit` are handled
/// column by column over the occupied inputs, without materializing the
/// lifted matrix; both routes produce identical results.
PureState apply(const ModeUnitary& u, const PureState& state, Side side = Side::Both,
                Eigen::Index materialize_limit = 512);

}  // namespace fockwitness
