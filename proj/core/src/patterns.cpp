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

#include "fockwitness/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockwitness/unitary.hpp"

namespace fockwitness {

int k_value(const PhotonPattern& n) {
  const int m = n.modes();
  long long total = 0;
  for (int k = 0; k < m; ++k) {
    total += static_cast<long long>(n.occupation(k)) * k;
  }
  return static_cast<int>(total % m);
}

PatternClass::PatternClass(const PhotonPattern& member) {
  // Walk the orbit once to find the cardinality and the greatest element.
  std::vector<PhotonPattern> orbit;
  orbit.push_back(member);
  for (PhotonPattern p = member.shifted(1); !(p == member); p = p.shifted(1)) {
    orbit.push_back(p);
  }
  const auto rep = std::max_element(orbit.begin(), orbit.end());
  const auto offset = rep - orbit.begin();
  elements_.reserve(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) {
    elements_.push_back(orbit[(static_cast<size_t>(offset) + i) % orbit.size()]);
  }

  const int m = member.modes();
  const int d = cardinality();
  allowed_k_.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    allowed_k_.push_back(i * (m / d));
  }
}

bool PatternClass::allows_k(int k) const {
  const int m = modes();
  int kk = k % m;
  if (kk < 0) {
    kk += m;
  }
  return kk % (m / cardinality()) == 0;
}

std::vector<PatternClass> enumerate_classes(const FockBasis& basis) {
  std::vector<PatternClass> out;
  std::vector<bool> seen(basis.size(), false);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    PatternClass cls(basis.pattern(i));
    for (const auto& e : cls.elements()) {
      seen[*basis.index_of(e)] = true;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::optional<PatternClass> complementary_class(const PatternClass& cls) {
  if (!cls.single_occupancy()) {
    return std::nullopt;
  }
  return PatternClass(cls.representative().complement());
}

PureState class_eigenstate(const PhotonPattern& anchor, int k) {
  const PatternClass cls(anchor);
  const int m = anchor.modes();
  const int d = cls.cardinality();
  int kk = k % m;
  if (kk < 0) {
    kk += m;
  }
  if (!cls.allows_k(kk)) {
    throw std::domain_error("K=" + std::to_string(k) + " is not a multiple of " +
                            std::to_string(m / d) + " for class " +
                            cls.representative().str());
  }
  FockBasis basis(m, anchor.photons());
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  PhotonPattern p = anchor;
  for (int dm = 0; dm < d; ++dm) {
    const double phase = -2.0 * std::numbers::pi * static_cast<double>((kk * dm) % m) / m;
    amp(static_cast<Eigen::Index>(*basis.index_of(p))) +=
        scale * Complex(std::cos(phase), std::sin(phase));
    p = p.shifted(1);
  }
  return PureState::local(std::move(basis), std::move(amp));
}

PureState class_eigenstate(const PatternClass& cls, int k) {
  return class_eigenstate(cls.representative(), k);
}

std::vector<DftClassTerm> decompose_dft_output(const PhotonPattern& n) {
  constexpr double kDropTol = 1e-12;
  const int m = n.modes();
  const FockBasis basis(m, n.photons());
  const Eigen::VectorXcd pre_image =
      lift_column(ModeUnitary::dft(m).adjoint(), basis, n);
  const int k = k_value(n);

  std::vector<DftClassTerm> terms;
  for (auto& cls : enumerate_classes(basis)) {
    if (!cls.allows_k(k)) {
      continue;
    }
    const Complex coeff = class_eigenstate(cls, k).amplitudes().dot(pre_image);
    if (std::abs(coeff) <= kDropTol) {
      continue;
    }
    terms.push_back(DftClassTerm{std::move(cls), k, coeff});
  }
  return terms;
}

}  // namespace fockwitness
