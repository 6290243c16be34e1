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

#include <optional>
#include <vector>

#include "fockwitness/basis.hpp"
#include "fockwitness/state.hpp"

namespace fockwitness {

/// K(n) = sum_k n_k * k (mod M), the modular mode-index sum of a pattern.
/// A pattern observed behind a DFT lives in the mode-shift eigenspace with
/// eigenvalue exp(i 2 pi K / M), so K labels which input coherences can
/// produce it.
int k_value(const PhotonPattern& n);

/// The cyclic equivalence class of a pattern under mode shifts.
///
/// The canonical representative is the lexicographically greatest element.
/// elements() lists the orbit by increasing shift count from the
/// representative: [rep, S rep, ..., S^{d-1} rep], where the cardinality d
/// always divides M. K-values realizable inside the class subspace are the
/// multiples of M / d.
class PatternClass {
 public:
  explicit PatternClass(const PhotonPattern& member);

  const PhotonPattern& representative() const { return elements_.front(); }
  const std::vector<PhotonPattern>& elements() const { return elements_; }
  int cardinality() const { return static_cast<int>(elements_.size()); }
  int modes() const { return representative().modes(); }
  int photons() const { return representative().photons(); }

  /// Sorted list {0, M/d, 2M/d, ..., M - M/d}.
  const std::vector<int>& allowed_k() const { return allowed_k_; }
  /// K is normalized mod M before the membership test.
  bool allows_k(int k) const;

  bool single_occupancy() const { return representative().single_occupancy(); }

  friend bool operator==(const PatternClass& a, const PatternClass& b) {
    return a.representative() == b.representative();
  }

 private:
  std::vector<PhotonPattern> elements_;
  std::vector<int> allowed_k_;
};

inline PatternClass pattern_class(const PhotonPattern& p) { return PatternClass(p); }

/// All classes partitioning a basis, ordered by first occurrence in the
/// canonical basis order (so representatives appear in descending
/// lexicographic order).
std::vector<PatternClass> enumerate_classes(const FockBasis& basis);

/// The class of the complemented pattern (1,...,1) - p, or nullopt when the
/// class contains a multiply occupied mode and has no complement.
std::optional<PatternClass> complementary_class(const PatternClass& cls);

/// Mode-shift eigenstate of the class orbit through `anchor`, with phases
/// anchored there:
///
///   (1/sqrt(d)) * sum_{dm} exp(-i 2 pi K dm / M) S^{dm} |anchor>
///
/// It satisfies  lift(S) |E> = exp(i 2 pi K / M) |E>.  Changing the anchor
/// within the class changes only a global phase; anchoring is what makes
/// relative signs between decomposition coefficients reproducible.
/// Throws std::domain_error when K is not a multiple of M / d.
PureState class_eigenstate(const PhotonPattern& anchor, int k);

/// Same, anchored at the canonical representative.
PureState class_eigenstate(const PatternClass& cls, int k);

struct DftClassTerm {
  PatternClass pattern_class;
  int k = 0;
  Complex coefficient;
};

/// Expands the DFT pre-image of an output pattern in the class-eigenstate
/// basis: adjoint(U_F) |n> = sum_p c_p |E_p, K(n)>. Only classes with the
/// same photon number whose allowed K-values include K(n) can appear; terms
/// with |c| <= 1e-12 are dropped. The squared moduli of the returned
/// coefficients sum to one.
std::vector<DftClassTerm> decompose_dft_output(const PhotonPattern& n);

}  // namespace fockwitness
