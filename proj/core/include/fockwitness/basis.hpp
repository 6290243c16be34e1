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

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fockwitness/pattern.hpp"

namespace fockwitness {

/// The full Fock basis of N photons in M modes: all binomial(M+N-1, N)
/// occupation patterns, enumerated in strictly descending lexicographic
/// order. For (M=4, N=2): 2000, 1100, 1010, 1001, 0200, 0110, 0101, 0020,
/// 0011, 0002. The order is deterministic and is the canonical index used
/// by state vectors and lifted operators.
///
/// Copies are cheap: the enumeration is shared, immutable storage.
class FockBasis {
 public:
  FockBasis(int modes, int photons);

  int modes() const { return data_->modes; }
  int photons() const { return data_->photons; }
  size_t size() const { return data_->patterns.size(); }

  const PhotonPattern& pattern(size_t index) const { return data_->patterns[index]; }
  const std::vector<PhotonPattern>& patterns() const { return data_->patterns; }

  /// Position of `p` in the enumeration, or nullopt if it does not belong
  /// (wrong mode count or photon number).
  std::optional<size_t> index_of(const PhotonPattern& p) const;

  friend bool operator==(const FockBasis& a, const FockBasis& b) {
    return a.modes() == b.modes() && a.photons() == b.photons();
  }

 private:
  struct Data {
    int modes;
    int photons;
    std::vector<PhotonPattern> patterns;
  };
  std::shared_ptr<const Data> data_;
};

/// Convenience spelling of the constructor.
inline FockBasis enumerate_basis(int modes, int photons) { return FockBasis(modes, photons); }

/// Position a pattern would take in the canonical enumeration, computed
/// combinatorially. Agrees with FockBasis::index_of but needs no
/// materialized basis, so it stays cheap on huge spaces.
size_t pattern_rank(const PhotonPattern& p);

/// Inverse of pattern_rank. Throws std::domain_error when the index is out
/// of range for the (modes, photons) space.
PhotonPattern pattern_unrank(int modes, int photons, size_t index);

}  // namespace fockwitness
