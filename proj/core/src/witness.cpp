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

#include "fockwitness/witness.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "fockwitness/entangle.hpp"
#include "fockwitness/errors.hpp"
#include "fockwitness/patterns.hpp"
#include "fockwitness/unitary.hpp"

namespace fockwitness {

namespace {

constexpr size_t kOperatorDimensionCap = 4096;

void require_fixed_partition(const FockBasis& ba, const FockBasis& bb) {
  if (ba.modes() != bb.modes() || ba.photons() + bb.photons() != ba.modes()) {
    throw std::domain_error(
        "witness evaluation needs a joint state on a fixed (N, M-N) photon partition");
  }
}

std::vector<int> k_values_of(const FockBasis& basis) {
  std::vector<int> k(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    k[i] = k_value(basis.pattern(i));
  }
  return k;
}

// Index pairs (a-side, b-side) of one complementary class block.
struct ClassBlock {
  int cardinality;
  std::vector<size_t> indices_a;
  std::vector<size_t> indices_b;
};

std::vector<ClassBlock> complementary_blocks(const FockBasis& ba, const FockBasis& bb) {
  std::vector<ClassBlock> blocks;
  for (const auto& cls : enumerate_classes(ba)) {
    if (!cls.single_occupancy()) {
      continue;
    }
    ClassBlock block;
    block.cardinality = cls.cardinality();
    for (const auto& e : cls.elements()) {
      block.indices_a.push_back(*ba.index_of(e));
      block.indices_b.push_back(*bb.index_of(e.complement()));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int min_class_cardinality(const FockBasis& basis) {
  int best = basis.modes();
  for (const auto& cls : enumerate_classes(basis)) {
    best = std::min(best, cls.cardinality());
  }
  return best;
}

double fidelity_input_pure(const PureState& psi) {
  const FockBasis& ba = psi.basis_a();
  const FockBasis& bb = psi.basis_b();
  double total = 0.0;
  for (size_t ia = 0; ia < ba.size(); ++ia) {
    const PhotonPattern& p = ba.pattern(ia);
    if (!p.single_occupancy()) {
      continue;
    }
    const auto ib = bb.index_of(p.complement());
    total += std::norm(
        psi.amplitude(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(*ib)));
  }
  return total;
}

double fidelity_dft_pure(const PureState& psi, const std::vector<int>& k_a,
                         const std::vector<int>& k_b) {
  const int m = psi.basis_a().modes();
  const PureState out = apply(ModeUnitary::dft(m), psi, Side::Both);
  double total = 0.0;
  for (size_t ia = 0; ia < k_a.size(); ++ia) {
    for (size_t ib = 0; ib < k_b.size(); ++ib) {
      if ((k_a[ia] + k_b[ib]) % m == 0) {
        total += std::norm(
            out.amplitude(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)));
      }
    }
  }
  return total;
}

double pattern_defect_pure(const PureState& psi, const std::vector<ClassBlock>& blocks) {
  double defect = 0.0;
  for (const auto& block : blocks) {
    double mass = 0.0;
    for (size_t ia : block.indices_a) {
      for (size_t ib : block.indices_b) {
        mass += std::norm(
            psi.amplitude(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)));
      }
    }
    defect += mass / block.cardinality;
  }
  return defect;
}

WitnessReport assemble(int modes, int photons_a, double f_in, double f_dft, double defect) {
  WitnessReport r;
  r.modes = modes;
  r.photons_a = photons_a;
  r.photons_b = modes - photons_a;
  r.fidelity_input = f_in;
  r.fidelity_dft = f_dft;
  r.pattern_defect = defect;
  r.basic_bound = to_double(basic_bound(modes, photons_a));
  r.optimized_lhs = f_in - defect + f_dft;
  r.witness_value = r.optimized_lhs - 1.0;
  r.entangled_by_basic = f_in + f_dft > r.basic_bound;
  r.entangled_by_optimized = r.witness_value > 0.0;
  return r;
}

}  // namespace

double fidelity_input(const MixedEnsemble& state) {
  require_fixed_partition(state.basis_a(), state.basis_b());
  double total = 0.0;
  for (const auto& [w, psi] : state.components()) {
    total += w * fidelity_input_pure(psi);
  }
  return total;
}

double fidelity_input(const PureState& state) {
  return fidelity_input(MixedEnsemble::from_pure(state));
}

double fidelity_dft(const MixedEnsemble& state) {
  require_fixed_partition(state.basis_a(), state.basis_b());
  const auto k_a = k_values_of(state.basis_a());
  const auto k_b = k_values_of(state.basis_b());
  double total = 0.0;
  for (const auto& [w, psi] : state.components()) {
    total += w * fidelity_dft_pure(psi, k_a, k_b);
  }
  return total;
}

double fidelity_dft(const PureState& state) {
  return fidelity_dft(MixedEnsemble::from_pure(state));
}

double pattern_defect(const MixedEnsemble& state) {
  require_fixed_partition(state.basis_a(), state.basis_b());
  const auto blocks = complementary_blocks(state.basis_a(), state.basis_b());
  double total = 0.0;
  for (const auto& [w, psi] : state.components()) {
    total += w * pattern_defect_pure(psi, blocks);
  }
  return total;
}

double pattern_defect(const PureState& state) {
  return pattern_defect(MixedEnsemble::from_pure(state));
}

Rational basic_bound(int modes, int photons_a) {
  if (photons_a < 1 || photons_a > modes - 1) {
    throw std::domain_error("separable bound needs 1 <= N <= M-1");
  }
  return Rational(1) + Rational(1, min_class_cardinality(FockBasis(modes, photons_a)));
}

WitnessReport evaluate(const MixedEnsemble& state) {
  require_fixed_partition(state.basis_a(), state.basis_b());
  return assemble(state.basis_a().modes(), state.basis_a().photons(), fidelity_input(state),
                  fidelity_dft(state), pattern_defect(state));
}

WitnessReport evaluate(const PureState& state) {
  return evaluate(MixedEnsemble::from_pure(state));
}

WitnessReport evaluate_uniform(int modes, int photons_a) {
  const FockBasis ba(modes, photons_a);
  const FockBasis bb(modes, modes - photons_a);
  const Rational dim = Rational(BigInt(ba.size()) * BigInt(bb.size()));

  const Rational f_in = Rational(binomial_exact(modes, photons_a)) / dim;

  // The maximally mixed state is invariant under the DFT, so the K
  // correlation reduces to counting pattern pairs.
  const auto k_a = k_values_of(ba);
  const auto k_b = k_values_of(bb);
  std::vector<long long> count_a(static_cast<size_t>(modes), 0);
  std::vector<long long> count_b(static_cast<size_t>(modes), 0);
  for (int k : k_a) {
    ++count_a[static_cast<size_t>(k)];
  }
  for (int k : k_b) {
    ++count_b[static_cast<size_t>(k)];
  }
  long long matched = 0;
  for (int k = 0; k < modes; ++k) {
    matched += count_a[static_cast<size_t>(k)] *
               count_b[static_cast<size_t>((modes - k) % modes)];
  }
  const Rational f_dft = Rational(matched) / dim;

  // Each complementary class block of cardinality d holds d*d basis pairs,
  // weighted 1/d.
  BigInt block_sum = 0;
  for (const auto& block : complementary_blocks(ba, bb)) {
    block_sum += block.cardinality;
  }
  const Rational defect = Rational(block_sum) / dim;

  return assemble(modes, photons_a, to_double(f_in), to_double(f_dft), to_double(defect));
}

Eigen::MatrixXcd witness_operator(int modes, int photons_a) {
  if (photons_a < 1 || photons_a > modes - 1) {
    throw std::domain_error("witness operator needs 1 <= N <= M-1");
  }
  const FockBasis ba(modes, photons_a);
  const FockBasis bb(modes, modes - photons_a);
  const size_t da = ba.size();
  const size_t db = bb.size();
  const size_t dim = da * db;
  if (dim > kOperatorDimensionCap) {
    throw resource_error("joint dimension " + std::to_string(dim) + " exceeds the " +
                         std::to_string(kOperatorDimensionCap) + " operator cap");
  }
  const auto d = static_cast<Eigen::Index>(dim);

  Eigen::VectorXd diag_n = Eigen::VectorXd::Zero(d);
  for (size_t ia = 0; ia < da; ++ia) {
    const PhotonPattern& p = ba.pattern(ia);
    if (!p.single_occupancy()) {
      continue;
    }
    const auto ib = bb.index_of(p.complement());
    diag_n(static_cast<Eigen::Index>(ia * db + *ib)) = 1.0;
  }

  Eigen::VectorXd diag_p = Eigen::VectorXd::Zero(d);
  for (const auto& block : complementary_blocks(ba, bb)) {
    for (size_t ia : block.indices_a) {
      for (size_t ib : block.indices_b) {
        diag_p(static_cast<Eigen::Index>(ia * db + ib)) += 1.0 / block.cardinality;
      }
    }
  }

  // Projector onto K_A + K_B = 0 (mod M) behind the DFT, pulled back to the
  // input basis: adjoint(L) diag L with L the joint lift of the DFT.
  const Eigen::MatrixXcd la = lift(ModeUnitary::dft(modes), ba).matrix();
  const Eigen::MatrixXcd lb =
      (ba == bb) ? la : lift(ModeUnitary::dft(modes), bb).matrix();
  const auto k_a = k_values_of(ba);
  const auto k_b = k_values_of(bb);
  Eigen::MatrixXcd joint_lift(d, d);
  for (size_t ia = 0; ia < da; ++ia) {
    for (size_t ib = 0; ib < db; ++ib) {
      for (size_t ja = 0; ja < da; ++ja) {
        for (size_t jb = 0; jb < db; ++jb) {
          joint_lift(static_cast<Eigen::Index>(ia * db + ib),
                     static_cast<Eigen::Index>(ja * db + jb)) =
              la(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ja)) *
              lb(static_cast<Eigen::Index>(ib), static_cast<Eigen::Index>(jb));
        }
      }
    }
  }
  Eigen::VectorXd diag_k = Eigen::VectorXd::Zero(d);
  for (size_t ia = 0; ia < da; ++ia) {
    for (size_t ib = 0; ib < db; ++ib) {
      if ((k_a[ia] + k_b[ib]) % modes == 0) {
        diag_k(static_cast<Eigen::Index>(ia * db + ib)) = 1.0;
      }
    }
  }
  const Eigen::MatrixXcd c_k = joint_lift.adjoint() * diag_k.asDiagonal() * joint_lift;

  Eigen::MatrixXcd w = c_k;
  w.diagonal() += (diag_n - diag_p - Eigen::VectorXd::Ones(d)).cast<Complex>();
  return w;
}

double max_witness_eigenvalue(int modes, int photons_a) {
  const Eigen::MatrixXcd w = witness_operator(modes, photons_a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

MixtureLaw mixture_threshold(int modes, int photons_a) {
  const WitnessReport ideal = evaluate(phi_partition(modes, photons_a));
  const WitnessReport uniform = evaluate_uniform(modes, photons_a);
  MixtureLaw law;
  law.offset = uniform.witness_value;
  law.slope = ideal.witness_value - uniform.witness_value;
  law.threshold = -law.offset / law.slope;
  return law;
}

FidelityThresholds state_fidelity_thresholds(int modes, int photons_a) {
  const Rational bound = basic_bound(modes, photons_a);

  const FockBasis ba(modes, photons_a);
  BigInt n_complementary_classes = 0;
  int min_complementary_cardinality = modes;
  for (const auto& cls : enumerate_classes(ba)) {
    if (!cls.single_occupancy()) {
      continue;
    }
    ++n_complementary_classes;
    min_complementary_cardinality = std::min(min_complementary_cardinality, cls.cardinality());
  }

  const Rational defect_ideal =
      Rational(n_complementary_classes, binomial_exact(modes, photons_a));
  const Rational lhs_ideal = Rational(2) - defect_ideal;
  // Worst case for the errors: all of their weight in the smallest
  // complementary class, contributing nothing to either fidelity.
  const Rational worst_error_defect = Rational(1, min_complementary_cardinality);

  FidelityThresholds t;
  t.basic = bound / 2;
  t.tight = (Rational(1) + worst_error_defect) / (lhs_ideal + worst_error_defect);
  return t;
}

PureState sample_product_state(const FockBasis& basis_a, const FockBasis& basis_b,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&](const FockBasis& basis) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(basis.size()));
    do {
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(gauss(rng), gauss(rng));
      }
    } while (v.norm() < 1e-12);
    return PureState::local(basis, v / v.norm());
  };
  return tensor(draw(basis_a), draw(basis_b));
}

}  // namespace fockwitness
