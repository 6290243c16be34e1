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

#include "fockwitness/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fockwitness {

PhotonPattern::PhotonPattern(std::vector<int> occupations) : occ_(std::move(occupations)) {
  if (occ_.empty()) {
    throw std::domain_error("photon pattern needs at least one mode");
  }
  for (int n : occ_) {
    if (n < 0) {
      throw std::domain_error("photon occupations must be non-negative");
    }
  }
}

int PhotonPattern::photons() const {
  return std::accumulate(occ_.begin(), occ_.end(), 0);
}

bool PhotonPattern::single_occupancy() const {
  return std::all_of(occ_.begin(), occ_.end(), [](int n) { return n <= 1; });
}

PhotonPattern PhotonPattern::shifted(int delta) const {
  const int m = modes();
  std::vector<int> out(occ_.size(), 0);
  for (int i = 0; i < m; ++i) {
    int j = (i + delta) % m;
    if (j < 0) {
      j += m;
    }
    out[static_cast<size_t>(j)] = occ_[static_cast<size_t>(i)];
  }
  return PhotonPattern(std::move(out));
}

PhotonPattern PhotonPattern::complement() const {
  if (!single_occupancy()) {
    throw std::domain_error("complement is only defined for single-occupancy patterns");
  }
  std::vector<int> out(occ_.size());
  std::transform(occ_.begin(), occ_.end(), out.begin(), [](int n) { return 1 - n; });
  return PhotonPattern(std::move(out));
}

std::string PhotonPattern::str() const {
  const bool compact = std::all_of(occ_.begin(), occ_.end(), [](int n) { return n <= 9; });
  std::string out;
  for (size_t i = 0; i < occ_.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + occ_[i]);
    } else {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(occ_[i]);
    }
  }
  return out;
}

PhotonPattern PhotonPattern::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty photon pattern");
  }
  std::vector<int> occ;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view field =
          text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (field.empty()) {
        throw std::invalid_argument("empty field in photon pattern");
      }
      int value = 0;
      for (char c : field) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("invalid character in photon pattern");
        }
        value = value * 10 + (c - '0');
        if (value > 1000000) {
          throw std::invalid_argument("photon occupation out of range");
        }
      }
      occ.push_back(value);
      if (next == std::string_view::npos) {
        break;
      }
      pos = next + 1;
    }
  } else {
    occ.reserve(text.size());
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("invalid character in photon pattern");
      }
      occ.push_back(c - '0');
    }
  }
  return PhotonPattern(std::move(occ));
}

}  // namespace fockwitness
