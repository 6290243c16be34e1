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

#include "fockwitness/state.hpp"

#include <cmath>
#include <stdexcept>

#include "fockwitness/errors.hpp"

namespace fockwitness {

PureState::PureState(FockBasis basis_a, std::optional<FockBasis> basis_b, Eigen::VectorXcd amp)
    : basis_a_(std::move(basis_a)), basis_b_(std::move(basis_b)), amp_(std::move(amp)) {}

PureState PureState::local(FockBasis basis, Eigen::VectorXcd amplitudes) {
  if (amplitudes.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::domain_error("amplitude vector does not match basis size");
  }
  return PureState(std::move(basis), std::nullopt, std::move(amplitudes));
}

PureState PureState::joint(FockBasis basis_a, FockBasis basis_b, Eigen::VectorXcd amplitudes) {
  if (basis_a.modes() != basis_b.modes()) {
    throw std::domain_error("joint state requires matching mode counts");
  }
  const auto dim = static_cast<Eigen::Index>(basis_a.size() * basis_b.size());
  if (amplitudes.size() != dim) {
    throw std::domain_error("amplitude vector does not match joint basis size");
  }
  return PureState(std::move(basis_a), std::move(basis_b), std::move(amplitudes));
}

PureState PureState::joint_from_matrix(FockBasis basis_a, FockBasis basis_b,
                                       const Eigen::MatrixXcd& amplitudes) {
  if (amplitudes.rows() != static_cast<Eigen::Index>(basis_a.size()) ||
      amplitudes.cols() != static_cast<Eigen::Index>(basis_b.size())) {
    throw std::domain_error("amplitude matrix does not match joint basis sizes");
  }
  Eigen::VectorXcd flat(amplitudes.size());
  for (Eigen::Index i = 0; i < amplitudes.rows(); ++i) {
    flat.segment(i * amplitudes.cols(), amplitudes.cols()) = amplitudes.row(i).transpose();
  }
  return joint(std::move(basis_a), std::move(basis_b), std::move(flat));
}

PureState PureState::basis_state(const FockBasis& basis, const PhotonPattern& n) {
  auto idx = basis.index_of(n);
  if (!idx) {
    throw std::domain_error("pattern " + n.str() + " is not in the basis");
  }
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  amp(static_cast<Eigen::Index>(*idx)) = 1.0;
  return local(basis, std::move(amp));
}

PureState PureState::joint_basis_state(const FockBasis& basis_a, const FockBasis& basis_b,
                                       const PhotonPattern& n_a, const PhotonPattern& n_b) {
  auto ia = basis_a.index_of(n_a);
  auto ib = basis_b.index_of(n_b);
  if (!ia || !ib) {
    throw std::domain_error("pattern pair is not in the joint basis");
  }
  const auto db = static_cast<Eigen::Index>(basis_b.size());
  Eigen::VectorXcd amp =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_a.size()) * db);
  amp(static_cast<Eigen::Index>(*ia) * db + static_cast<Eigen::Index>(*ib)) = 1.0;
  return joint(basis_a, basis_b, std::move(amp));
}

const FockBasis& PureState::basis_b() const {
  if (!basis_b_) {
    throw std::domain_error("state is not joint");
  }
  return *basis_b_;
}

Complex PureState::amplitude(Eigen::Index index_a, Eigen::Index index_b) const {
  return amp_(index_a * static_cast<Eigen::Index>(basis_b().size()) + index_b);
}

Eigen::MatrixXcd PureState::amplitude_matrix() const {
  const auto da = static_cast<Eigen::Index>(basis_a().size());
  const auto db = static_cast<Eigen::Index>(basis_b().size());
  Eigen::MatrixXcd m(da, db);
  for (Eigen::Index i = 0; i < da; ++i) {
    m.row(i) = amp_.segment(i * db, db).transpose();
  }
  return m;
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n < 1e-300) {
    throw std::domain_error("cannot normalize a zero state");
  }
  return PureState(basis_a_, basis_b_, amp_ / n);
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.is_joint() || b.is_joint()) {
    throw std::domain_error("tensor expects two local states");
  }
  const auto da = a.dim();
  const auto db = b.dim();
  Eigen::VectorXcd amp(da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    amp.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState::joint(a.basis_a(), b.basis_a(), std::move(amp));
}

double joint_probability(const PureState& state, const PhotonPattern& n_a,
                         const PhotonPattern& n_b) {
  auto ia = state.basis_a().index_of(n_a);
  auto ib = state.basis_b().index_of(n_b);
  if (!ia || !ib) {
    throw std::domain_error("pattern pair is not in the state's joint basis");
  }
  return std::norm(
      state.amplitude(static_cast<Eigen::Index>(*ia), static_cast<Eigen::Index>(*ib)));
}

MixedEnsemble::MixedEnsemble(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::domain_error("mixture needs at least one component");
  }
  double total = 0.0;
  for (const auto& [w, psi] : components_) {
    if (w < 0.0) {
      throw std::domain_error("mixture weights must be non-negative");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw std::domain_error("mixture weights must not all vanish");
  }
  const auto& first = components_.front().second;
  for (const auto& [w, psi] : components_) {
    const bool same_shape =
        psi.is_joint() == first.is_joint() && psi.basis_a() == first.basis_a() &&
        (!psi.is_joint() || psi.basis_b() == first.basis_b());
    if (!same_shape) {
      throw std::domain_error("mixture components must share one basis structure");
    }
  }
  for (auto& [w, psi] : components_) {
    w /= total;
  }
}

MixedEnsemble MixedEnsemble::from_pure(PureState psi) {
  std::vector<Component> c;
  c.emplace_back(1.0, std::move(psi));
  return MixedEnsemble(std::move(c));
}

MixedEnsemble MixedEnsemble::uniform_joint(const FockBasis& basis_a, const FockBasis& basis_b) {
  const size_t dim = basis_a.size() * basis_b.size();
  if (dim > 4096) {
    throw resource_error("uniform ensemble on a joint space of dimension " +
                         std::to_string(dim) + " (cap 4096)");
  }
  std::vector<Component> c;
  c.reserve(dim);
  const double w = 1.0 / static_cast<double>(dim);
  for (size_t ia = 0; ia < basis_a.size(); ++ia) {
    for (size_t ib = 0; ib < basis_b.size(); ++ib) {
      c.emplace_back(w, PureState::joint_basis_state(basis_a, basis_b, basis_a.pattern(ia),
                                                     basis_b.pattern(ib)));
    }
  }
  return MixedEnsemble(std::move(c));
}

MixedEnsemble mix(std::vector<std::pair<double, PureState>> components) {
  return MixedEnsemble(std::move(components));
}

double joint_probability(const MixedEnsemble& state, const PhotonPattern& n_a,
                         const PhotonPattern& n_b) {
  double p = 0.0;
  for (const auto& [w, psi] : state.components()) {
    p += w * joint_probability(psi, n_a, n_b);
  }
  return p;
}

}  // namespace fockwitness
