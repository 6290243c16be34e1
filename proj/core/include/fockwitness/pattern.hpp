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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fockwitness {

/// A photon number distribution over M modes: occupation n_m per mode m.
///
/// Text form: a contiguous digit string when every occupation is <= 9
/// ("1100"), comma-separated integers otherwise ("10,0,2,0"). This is the
/// format used by the CLI and by JSON dumps.
class PhotonPattern {
 public:
  /// Occupations must be non-empty with non-negative entries.
  explicit PhotonPattern(std::vector<int> occupations);

  static PhotonPattern parse(std::string_view text);

  int modes() const { return static_cast<int>(occ_.size()); }
  int photons() const;

  int occupation(int mode) const { return occ_[static_cast<size_t>(mode)]; }
  const std::vector<int>& occupations() const { return occ_; }

  /// True when every mode holds at most one photon.
  bool single_occupancy() const;

  /// Cyclic relabeling m -> m + delta (mod M). Negative deltas allowed.
  PhotonPattern shifted(int delta) const;

  /// (1,...,1) - n. Only defined for single-occupancy patterns.
  PhotonPattern complement() const;

  std::string str() const;

  friend bool operator==(const PhotonPattern&, const PhotonPattern&) = default;
  // Lexicographic on the occupation vector.
  friend std::strong_ordering operator<=>(const PhotonPattern&, const PhotonPattern&) = default;

 private:
  std::vector<int> occ_;
};

}  // namespace fockwitness
