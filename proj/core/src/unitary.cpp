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

#include "fockwitness/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fockwitness/permanent.hpp"

namespace fockwitness {

namespace {

constexpr double kUnitarityTol = 1e-10;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

// Row/column multiplicities of the transition submatrix.
std::vector<int> expand_modes(const PhotonPattern& p) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.photons()));
  for (int m = 0; m < p.modes(); ++m) {
    for (int c = 0; c < p.occupation(m); ++c) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd transfer) : t_(std::move(transfer)) {
  if (t_.rows() != t_.cols() || t_.rows() < 1) {
    throw std::domain_error("mode unitary must be a square matrix");
  }
  const Eigen::MatrixXcd gram = t_.adjoint() * t_;
  const double residual =
      (gram - Eigen::MatrixXcd::Identity(t_.rows(), t_.cols())).cwiseAbs().maxCoeff();
  if (residual > kUnitarityTol) {
    throw std::domain_error("matrix is not unitary (residual " + std::to_string(residual) + ")");
  }
}

ModeUnitary ModeUnitary::identity(int modes) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  return ModeUnitary(Eigen::MatrixXcd::Identity(modes, modes), unchecked_tag{});
}

ModeUnitary ModeUnitary::dft(int modes) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  Eigen::MatrixXcd t(modes, modes);
  const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
  for (int k = 0; k < modes; ++k) {
    for (int m = 0; m < modes; ++m) {
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>((k * m) % modes) / modes;
      t(k, m) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return ModeUnitary(std::move(t), unchecked_tag{});
}

ModeUnitary ModeUnitary::mode_shift(int modes) {
  if (modes < 1) {
    throw std::domain_error("mode count must be at least 1");
  }
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(modes, modes);
  for (int m = 0; m < modes; ++m) {
    t((m + 1) % modes, m) = 1.0;
  }
  return ModeUnitary(std::move(t), unchecked_tag{});
}

ModeUnitary ModeUnitary::balanced_splitter() {
  Eigen::MatrixXcd t(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  t << s, s, s, -s;
  return ModeUnitary(std::move(t), unchecked_tag{});
}

ModeUnitary ModeUnitary::adjoint() const {
  return ModeUnitary(t_.adjoint(), unchecked_tag{});
}

ModeUnitary operator*(const ModeUnitary& lhs, const ModeUnitary& rhs) {
  if (lhs.modes() != rhs.modes()) {
    throw std::domain_error("mode count mismatch in composition");
  }
  return ModeUnitary(lhs.t_ * rhs.t_, ModeUnitary::unchecked_tag{});
}

FockUnitary::FockUnitary(FockBasis basis, Eigen::MatrixXcd entries)
    : basis_(std::move(basis)), m_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  if (m_.rows() != dim || m_.cols() != dim) {
    throw std::domain_error("lifted matrix does not match basis size");
  }
}

Complex fock_amplitude(const ModeUnitary& u, const PhotonPattern& out, const PhotonPattern& in) {
  if (out.modes() != u.modes() || in.modes() != u.modes()) {
    throw std::domain_error("pattern mode count does not match the unitary");
  }
  if (out.photons() != in.photons()) {
    return {0.0, 0.0};
  }
  const auto rows = expand_modes(out);
  const auto cols = expand_modes(in);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd sub(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sub(i, j) = u.transfer()(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
    }
  }
  double norm = 1.0;
  for (int m = 0; m < out.modes(); ++m) {
    norm *= factorial(out.occupation(m)) * factorial(in.occupation(m));
  }
  return permanent(sub) / std::sqrt(norm);
}

Eigen::VectorXcd lift_column(const ModeUnitary& u, const FockBasis& basis,
                             const PhotonPattern& in) {
  if (basis.modes() != u.modes()) {
    throw std::domain_error("basis mode count does not match the unitary");
  }
  Eigen::VectorXcd col(static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    col(static_cast<Eigen::Index>(i)) = fock_amplitude(u, basis.pattern(i), in);
  }
  return col;
}

FockUnitary lift(const ModeUnitary& u, const FockBasis& basis) {
  if (basis.modes() != u.modes()) {
    throw std::domain_error("basis mode count does not match the unitary");
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(dim, dim);
  for (size_t j = 0; j < basis.size(); ++j) {
    m.col(static_cast<Eigen::Index>(j)) = lift_column(u, basis, basis.pattern(j));
  }
  return FockUnitary(basis, std::move(m));
}

namespace {

Eigen::VectorXcd apply_local(const ModeUnitary& u, const FockBasis& basis,
                             const Eigen::VectorXcd& amp, Eigen::Index materialize_limit) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (dim <= materialize_limit) {
    return lift(u, basis).matrix() * amp;
  }
  // Column action over occupied inputs only; accumulation order is fixed by
  // the basis enumeration, so results are reproducible.
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (amp(j) == Complex{0.0, 0.0}) {
      continue;
    }
    out += amp(j) * lift_column(u, basis, basis.pattern(static_cast<size_t>(j)));
  }
  return out;
}

// Contract one side of a joint amplitude matrix with a lift.
Eigen::MatrixXcd apply_side(const ModeUnitary& u, const FockBasis& basis,
                            const Eigen::MatrixXcd& amp, bool side_a,
                            Eigen::Index materialize_limit) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (dim <= materialize_limit) {
    const Eigen::MatrixXcd l = lift(u, basis).matrix();
    return side_a ? Eigen::MatrixXcd(l * amp) : Eigen::MatrixXcd(amp * l.transpose());
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(amp.rows(), amp.cols());
  for (Eigen::Index j = 0; j < dim; ++j) {
    const bool occupied = side_a ? amp.row(j).cwiseAbs().maxCoeff() > 0.0
                                 : amp.col(j).cwiseAbs().maxCoeff() > 0.0;
    if (!occupied) {
      continue;
    }
    const Eigen::VectorXcd col = lift_column(u, basis, basis.pattern(static_cast<size_t>(j)));
    if (side_a) {
      out.noalias() += col * amp.row(j);
    } else {
      out.noalias() += amp.col(j) * col.transpose();
    }
  }
  return out;
}

}  // namespace

PureState apply(const ModeUnitary& u, const PureState& state, Side side,
                Eigen::Index materialize_limit) {
  if (!state.is_joint()) {
    if (side != Side::A) {
      throw std::domain_error("local states only support Side::A");
    }
    return PureState::local(
        state.basis_a(),
        apply_local(u, state.basis_a(), state.amplitudes(), materialize_limit));
  }
  Eigen::MatrixXcd amp = state.amplitude_matrix();
  if (side == Side::A || side == Side::Both) {
    amp = apply_side(u, state.basis_a(), amp, /*side_a=*/true, materialize_limit);
  }
  if (side == Side::B || side == Side::Both) {
    amp = apply_side(u, state.basis_b(), amp, /*side_a=*/false, materialize_limit);
  }
  return PureState::joint_from_matrix(state.basis_a(), state.basis_b(), amp);
}

}  // namespace fockwitness
