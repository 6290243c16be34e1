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

#include "fockwitness/basis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fockwitness/rational.hpp"

namespace fockwitness {

namespace {

std::vector<PhotonPattern> enumerate_descending(int modes, int photons) {
  std::vector<PhotonPattern> out;
  std::vector<int> c(static_cast<size_t>(modes), 0);
  c[0] = photons;
  while (true) {
    out.emplace_back(c);
    // Successor in descending lexicographic order: move one photon from the
    // rightmost occupied non-final mode to its neighbor, sweeping everything
    // beyond back onto that neighbor.
    int i = -1;
    for (int m = modes - 2; m >= 0; --m) {
      if (c[static_cast<size_t>(m)] > 0) {
        i = m;
        break;
      }
    }
    if (i < 0) {
      break;
    }
    const int tail = c[static_cast<size_t>(modes - 1)];
    c[static_cast<size_t>(modes - 1)] = 0;
    c[static_cast<size_t>(i)] -= 1;
    for (int m = i + 2; m < modes; ++m) {
      c[static_cast<size_t>(m)] = 0;
    }
    c[static_cast<size_t>(i + 1)] = tail + 1;
  }
  return out;
}

}  // namespace

FockBasis::FockBasis(int modes, int photons) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  if (photons < 0) {
    throw std::domain_error("photon number must be non-negative");
  }
  data_ = std::make_shared<const Data>(Data{modes, photons, enumerate_descending(modes, photons)});
}

namespace {

// Compositions of `photons` into `modes` parts.
BigInt composition_count(int photons, int modes) {
  if (modes == 0) {
    return photons == 0 ? 1 : 0;
  }
  return binomial_exact(photons + modes - 1, photons);
}

size_t to_index(const BigInt& value) {
  if (value > BigInt(std::numeric_limits<size_t>::max())) {
    throw std::domain_error("basis index does not fit in size_t");
  }
  return value.convert_to<size_t>();
}

}  // namespace

size_t pattern_rank(const PhotonPattern& p) {
  const int modes = p.modes();
  BigInt rank = 0;
  int remaining = p.photons();
  for (int i = 0; i + 1 < modes; ++i) {
    // Everything with a larger occupation at the first differing mode
    // comes earlier in descending order.
    for (int v = remaining; v > p.occupation(i); --v) {
      rank += composition_count(remaining - v, modes - i - 1);
    }
    remaining -= p.occupation(i);
  }
  return to_index(rank);
}

PhotonPattern pattern_unrank(int modes, int photons, size_t index) {
  if (modes < 1 || photons < 0) {
    throw std::domain_error("invalid basis shape");
  }
  BigInt left(index);
  std::vector<int> occ(static_cast<size_t>(modes), 0);
  int remaining = photons;
  for (int i = 0; i + 1 < modes; ++i) {
    bool placed = false;
    for (int v = remaining; v >= 0; --v) {
      const BigInt count = composition_count(remaining - v, modes - i - 1);
      if (left < count) {
        occ[static_cast<size_t>(i)] = v;
        remaining -= v;
        placed = true;
        break;
      }
      left -= count;
    }
    if (!placed) {
      throw std::domain_error("basis index out of range");
    }
  }
  if (left != 0) {
    throw std::domain_error("basis index out of range");
  }
  occ[static_cast<size_t>(modes - 1)] = remaining;
  return PhotonPattern(std::move(occ));
}

std::optional<size_t> FockBasis::index_of(const PhotonPattern& p) const {
  if (p.modes() != modes() || p.photons() != photons()) {
    return std::nullopt;
  }
  const auto& pats = data_->patterns;
  auto it = std::lower_bound(pats.begin(), pats.end(), p,
                             [](const PhotonPattern& a, const PhotonPattern& b) { return a > b; });
  if (it == pats.end() || !(*it == p)) {
    return std::nullopt;
  }
  return static_cast<size_t>(it - pats.begin());
}

}  // namespace fockwitness
