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

#include "fockwitness/entangle.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockwitness/errors.hpp"
#include "fockwitness/unitary.hpp"

namespace fockwitness {

namespace {

constexpr int kMaxGeneratorModes = 12;

// Dense materialization guard for stratum projections (entries, not bytes).
constexpr size_t kMaxDenseJointDim = size_t{1} << 22;

}  // namespace

StratifiedState::StratifiedState(int modes, std::vector<Stratum> strata)
    : modes_(modes), strata_(std::move(strata)) {
  if (modes_ < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  std::sort(strata_.begin(), strata_.end(),
            [](const Stratum& a, const Stratum& b) { return a.photons_a < b.photons_a; });
  for (const auto& s : strata_) {
    if (s.photons_a < 0 || s.photons_a > modes_) {
      throw std::domain_error("stratum photon number out of range");
    }
  }
}

double StratifiedState::norm() const {
  double total = 0.0;
  for (const auto& s : strata_) {
    for (const auto& t : s.terms) {
      total += std::norm(t.amplitude);
    }
  }
  return std::sqrt(total);
}

double StratifiedState::stratum_probability(int photons_a) const {
  double total = 0.0;
  for (const auto& s : strata_) {
    if (s.photons_a != photons_a) {
      continue;
    }
    for (const auto& t : s.terms) {
      total += std::norm(t.amplitude);
    }
  }
  return total;
}

PureState StratifiedState::project(int photons_a) const {
  if (photons_a < 0 || photons_a > modes_) {
    throw std::domain_error("photon number out of range");
  }
  const FockBasis ba = basis_a(photons_a);
  const FockBasis bb = basis_b(photons_a);
  if (ba.size() * bb.size() > kMaxDenseJointDim) {
    throw resource_error("stratum too large to materialize densely");
  }
  const auto db = static_cast<Eigen::Index>(bb.size());
  Eigen::VectorXcd amp =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ba.size()) * db);
  for (const auto& s : strata_) {
    if (s.photons_a != photons_a) {
      continue;
    }
    for (const auto& t : s.terms) {
      amp(static_cast<Eigen::Index>(t.index_a) * db + static_cast<Eigen::Index>(t.index_b)) +=
          t.amplitude;
    }
  }
  if (amp.norm() < 1e-300) {
    throw std::domain_error("stratum carries no amplitude");
  }
  return PureState::joint(ba, bb, amp / amp.norm());
}

Complex StratifiedState::joint_amplitude(const PhotonPattern& n_a,
                                         const PhotonPattern& n_b) const {
  if (n_a.modes() != modes_ || n_b.modes() != modes_ ||
      n_a.photons() + n_b.photons() != modes_) {
    return {0.0, 0.0};
  }
  const size_t ia = pattern_rank(n_a);
  const size_t ib = pattern_rank(n_b);
  Complex total{0.0, 0.0};
  for (const auto& s : strata_) {
    if (s.photons_a != n_a.photons()) {
      continue;
    }
    for (const auto& t : s.terms) {
      if (t.index_a == ia && t.index_b == ib) {
        total += t.amplitude;
      }
    }
  }
  return total;
}

double StratifiedState::joint_probability(const PhotonPattern& n_a,
                                          const PhotonPattern& n_b) const {
  return std::norm(joint_amplitude(n_a, n_b));
}

StratifiedState generate_psi(int modes) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  if (modes > kMaxGeneratorModes) {
    throw resource_error("generator supports at most " +
                         std::to_string(kMaxGeneratorModes) + " modes");
  }
  const double amp = std::pow(2.0, -0.5 * modes);

  std::vector<StratifiedState::Stratum> strata;
  strata.reserve(static_cast<size_t>(modes) + 1);
  for (int n = 0; n <= modes; ++n) {
    strata.push_back({n, {}});
  }

  // One term per subset of modes kept on side A. Indices are computed
  // combinatorially so no stratum basis is ever materialized.
  for (uint64_t mask = 0; mask < (uint64_t{1} << modes); ++mask) {
    std::vector<int> occ_a(static_cast<size_t>(modes), 0);
    std::vector<int> occ_b(static_cast<size_t>(modes), 0);
    for (int m = 0; m < modes; ++m) {
      if (mask & (uint64_t{1} << m)) {
        occ_a[static_cast<size_t>(m)] = 1;
      } else {
        occ_b[static_cast<size_t>(m)] = 1;
      }
    }
    const PhotonPattern pa{std::move(occ_a)};
    const PhotonPattern pb{std::move(occ_b)};
    strata[static_cast<size_t>(pa.photons())].terms.push_back(
        {pattern_rank(pa), pattern_rank(pb), Complex{amp, 0.0}});
  }
  return StratifiedState(modes, std::move(strata));
}

StratifiedState generate_psi_via_splitters(int modes) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  if (modes > 6) {
    throw resource_error("splitter cross-validation route supports at most 6 modes");
  }

  // 2M-mode network: slots 0..M-1 feed side A, slots M..2M-1 feed side B.
  // Splitter m couples slot m (carrying one photon) with slot M+m (vacuum).
  const int total_modes = 2 * modes;
  Eigen::MatrixXcd net = Eigen::MatrixXcd::Zero(total_modes, total_modes);
  const Eigen::MatrixXcd bs = ModeUnitary::balanced_splitter().transfer();
  for (int m = 0; m < modes; ++m) {
    net(m, m) = bs(0, 0);
    net(m, modes + m) = bs(0, 1);
    net(modes + m, m) = bs(1, 0);
    net(modes + m, modes + m) = bs(1, 1);
  }
  const ModeUnitary network{std::move(net)};

  std::vector<int> occ(static_cast<size_t>(total_modes), 0);
  std::fill(occ.begin(), occ.begin() + modes, 1);
  const PhotonPattern input{std::move(occ)};

  const FockBasis full(total_modes, modes);
  const Eigen::VectorXcd image = lift_column(network, full, input);

  std::vector<StratifiedState::Stratum> strata;
  for (int n = 0; n <= modes; ++n) {
    strata.push_back({n, {}});
  }

  for (size_t i = 0; i < full.size(); ++i) {
    const Complex c = image(static_cast<Eigen::Index>(i));
    if (std::abs(c) < 1e-15) {
      continue;
    }
    const auto& occ_full = full.pattern(i).occupations();
    const PhotonPattern pa{std::vector<int>(occ_full.begin(), occ_full.begin() + modes)};
    const PhotonPattern pb{std::vector<int>(occ_full.begin() + modes, occ_full.end())};
    strata[static_cast<size_t>(pa.photons())].terms.push_back(
        {pattern_rank(pa), pattern_rank(pb), c});
  }
  return StratifiedState(modes, std::move(strata));
}

Rational partition_probability(int modes, int photons_at_a) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  if (photons_at_a < 0 || photons_at_a > modes) {
    throw std::domain_error("photon split must satisfy 0 <= N <= M");
  }
  return Rational(binomial_exact(modes, photons_at_a),
                  boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(modes)));
}

double gaussian_partition_estimate(int modes, int photons_at_a) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  const double m = modes;
  const double dev = photons_at_a - 0.5 * m;
  return std::sqrt(2.0 / (std::numbers::pi * m)) * std::exp(-2.0 * dev * dev / m);
}

PureState phi_partition(int modes, int photons_at_a) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  if (photons_at_a < 0 || photons_at_a > modes) {
    throw std::domain_error("photon split must satisfy 0 <= N <= M");
  }
  const FockBasis ba(modes, photons_at_a);
  const FockBasis bb(modes, modes - photons_at_a);
  if (ba.size() * bb.size() > kMaxDenseJointDim) {
    throw resource_error("joint space too large to materialize densely");
  }
  const double amp = 1.0 / std::sqrt(to_double(Rational(binomial_exact(modes, photons_at_a))));
  const auto db = static_cast<Eigen::Index>(bb.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ba.size()) * db);
  for (size_t ia = 0; ia < ba.size(); ++ia) {
    const PhotonPattern& p = ba.pattern(ia);
    if (!p.single_occupancy()) {
      continue;
    }
    const auto ib = bb.index_of(p.complement());
    v(static_cast<Eigen::Index>(ia) * db + static_cast<Eigen::Index>(*ib)) = amp;
  }
  return PureState::joint(ba, bb, std::move(v));
}

int schmidt_rank(const PureState& joint_state, double tol) {
  const Eigen::MatrixXcd amp = joint_state.amplitude_matrix();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(amp);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) {
      ++rank;
    }
  }
  return rank;
}

int schmidt_rank(const StratifiedState& state, double tol) {
  int rank = 0;
  for (const auto& s : state.strata()) {
    if (s.terms.empty()) {
      continue;
    }
    const double mass = state.stratum_probability(s.photons_a);
    if (mass <= tol * tol) {
      continue;
    }
    // project() renormalizes; scale the tolerance back to the global state.
    rank += schmidt_rank(state.project(s.photons_a), tol / std::sqrt(mass));
  }
  return rank;
}

}  // namespace fockwitness
