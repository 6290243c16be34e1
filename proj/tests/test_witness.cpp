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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fockwitness/entangle.hpp"
#include "fockwitness/errors.hpp"
#include "fockwitness/patterns.hpp"
#include "fockwitness/witness.hpp"
#include "oracle.hpp"

using namespace fockwitness;

namespace {

PureState separable_1100_0011() {
  const FockBasis basis(4, 2);
  return tensor(PureState::basis_state(basis, PhotonPattern({1, 1, 0, 0})),
                PureState::basis_state(basis, PhotonPattern({0, 0, 1, 1})));
}

}  // namespace

TEST_CASE("golden fidelities for the ideal state") {
  const WitnessReport r = evaluate(phi_partition(4, 2));
  CHECK(r.fidelity_input == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.fidelity_dft == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.pattern_defect == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(r.witness_value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(r.optimized_lhs == doctest::Approx(5.0 / 3.0).epsilon(1e-10));
  CHECK(r.entangled_by_basic);
  CHECK(r.entangled_by_optimized);
}

TEST_CASE("golden fidelities for the saturating separable state") {
  const WitnessReport r = evaluate(separable_1100_0011());
  CHECK(r.fidelity_input == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.fidelity_dft == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(r.pattern_defect == doctest::Approx(0.25).epsilon(1e-10));
  // Exactly on the tighter bound, not beyond it.
  CHECK(std::abs(r.witness_value) < 1e-10);
  CHECK(!r.entangled_by_basic);
}

TEST_CASE("golden fidelities for the maximally mixed state") {
  const WitnessReport analytic = evaluate_uniform(4, 2);
  CHECK(analytic.fidelity_input == doctest::Approx(0.06).epsilon(1e-12));
  CHECK(analytic.fidelity_dft == doctest::Approx(0.26).epsilon(1e-12));
  CHECK(analytic.pattern_defect == doctest::Approx(0.06).epsilon(1e-12));
  CHECK(analytic.witness_value == doctest::Approx(-0.74).epsilon(1e-12));

  // Same numbers from the explicit 100-component ensemble.
  const FockBasis basis(4, 2);
  const MixedEnsemble ensemble = MixedEnsemble::uniform_joint(basis, basis);
  const WitnessReport swept = evaluate(ensemble);
  CHECK(swept.fidelity_input == doctest::Approx(analytic.fidelity_input).epsilon(1e-10));
  CHECK(swept.fidelity_dft == doctest::Approx(analytic.fidelity_dft).epsilon(1e-10));
  CHECK(swept.pattern_defect == doctest::Approx(analytic.pattern_defect).epsilon(1e-10));

  CHECK(std::abs(joint_probability(ensemble, PhotonPattern({1, 0, 1, 0}),
                                   PhotonPattern({0, 2, 0, 0})) -
                 0.01) < 1e-12);
}

TEST_CASE("mix renormalizes and keeps statistics linear") {
  const PureState phi = phi_partition(4, 2);
  CHECK_THROWS_AS(mix({}), std::domain_error);

  const MixedEnsemble doubled = mix({{0.5, phi}, {0.5, phi}});
  CHECK(evaluate(doubled).witness_value ==
        doctest::Approx(evaluate(phi).witness_value).epsilon(1e-12));

  const MixedEnsemble skewed = mix({{3.0, phi}, {1.0, separable_1100_0011()}});
  const double expected =
      0.75 * evaluate(phi).witness_value + 0.25 * evaluate(separable_1100_0011()).witness_value;
  CHECK(evaluate(skewed).witness_value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("basic bound") {
  CHECK(basic_bound(4, 2) == Rational(3, 2));
  CHECK(basic_bound(4, 1) == Rational(5, 4));
  CHECK(basic_bound(6, 2) == Rational(4, 3));  // smallest class has cardinality 3
  for (int n = 1; n <= 4; ++n) {
    CHECK(basic_bound(5, n) == Rational(6, 5));  // prime mode count
  }
  CHECK_THROWS_AS(basic_bound(4, 0), std::domain_error);
  CHECK_THROWS_AS(basic_bound(4, 4), std::domain_error);
}

TEST_CASE("witness operator reproduces evaluate() and its spectrum") {
  const Eigen::MatrixXcd w = witness_operator(4, 2);
  REQUIRE(w.rows() == 100);
  CHECK((w - w.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(max_witness_eigenvalue(4, 2) == doctest::Approx(0.75).epsilon(1e-9));

  const PureState phi = phi_partition(4, 2);
  const Complex direct = phi.amplitudes().dot(w * phi.amplitudes());
  CHECK(std::abs(direct - Complex(2.0 / 3.0, 0.0)) < 1e-10);

  // tr(rho W) for a random mixture equals the probability-level evaluation.
  std::mt19937_64 rng(404);
  std::vector<std::pair<double, PureState>> components;
  components.emplace_back(0.35, phi);
  components.emplace_back(0.25, separable_1100_0011());
  for (int i = 0; i < 3; ++i) {
    components.emplace_back(0.4 / 3,
                            fockwitness::testing::random_joint_state(phi.basis_a(),
                                                                     phi.basis_b(), rng));
  }
  const MixedEnsemble rho = mix(std::move(components));
  Complex trace{0.0, 0.0};
  for (const auto& [weight, psi] : rho.components()) {
    trace += weight * psi.amplitudes().dot(w * psi.amplitudes());
  }
  CHECK(std::abs(trace.imag()) < 1e-10);
  CHECK(std::abs(trace.real() - evaluate(rho).witness_value) < 1e-10);
}

TEST_CASE("witness operator cap") {
  CHECK_NOTHROW(witness_operator(4, 1));
  // (7,3) is 84 * 210 = 17640 dimensional, beyond the operator cap.
  CHECK_THROWS_AS(witness_operator(7, 3), resource_error);
}

TEST_CASE("mixture law and thresholds at (4,2)") {
  const MixtureLaw law = mixture_threshold(4, 2);
  CHECK(law.slope == doctest::Approx(211.0 / 150.0).epsilon(1e-9));
  CHECK(law.offset == doctest::Approx(-0.74).epsilon(1e-9));
  CHECK(law.threshold == doctest::Approx(111.0 / 211.0).epsilon(1e-9));

  // Affine endpoints recover the pure cases.
  CHECK(law.slope * 1.0 + law.offset ==
        doctest::Approx(evaluate(phi_partition(4, 2)).witness_value).epsilon(1e-12));
  CHECK(law.slope * 0.0 + law.offset ==
        doctest::Approx(evaluate_uniform(4, 2).witness_value).epsilon(1e-12));

  const FidelityThresholds t = state_fidelity_thresholds(4, 2);
  CHECK(t.basic == Rational(3, 4));
  CHECK(t.tight == Rational(9, 13));
  CHECK(t.tight <= t.basic);
}

TEST_CASE("thresholds stay ordered across shapes") {
  for (int modes = 2; modes <= 6; ++modes) {
    for (int n = 1; n < modes; ++n) {
      const FidelityThresholds t = state_fidelity_thresholds(modes, n);
      CHECK(t.tight <= t.basic);
      CHECK(t.basic <= Rational(1));
      CHECK(t.tight > Rational(0));
    }
  }
}

TEST_CASE("separable saturation per complementary class") {
  // A product state built from any single-occupancy class representative
  // reaches the tighter bound exactly.
  const FockBasis basis(4, 2);
  for (const auto& cls : enumerate_classes(basis)) {
    if (!cls.single_occupancy()) {
      continue;
    }
    const PureState product =
        tensor(PureState::basis_state(basis, cls.representative()),
               PureState::basis_state(basis, cls.representative().complement()));
    const WitnessReport r = evaluate(product);
    CHECK(std::abs(r.optimized_lhs - 1.0) < 1e-10);
  }
}

TEST_CASE("sampled product states never violate the witness") {
  const FockBasis basis(4, 2);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const PureState product = sample_product_state(basis, basis, 0x5eed + i);
    CHECK(evaluate(product).witness_value <= 1e-9);
  }
}

TEST_CASE("per-class fidelity sums respect the block bounds") {
  // Product states supported inside one class pair obey
  //   F_n + F_K <= 1 + delta(comp) / d.
  const FockBasis basis(4, 2);
  const auto classes = enumerate_classes(basis);
  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_in_class = [&](const PatternClass& cls) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& e : cls.elements()) {
      v(static_cast<Eigen::Index>(*basis.index_of(e))) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::local(basis, v / v.norm());
  };
  for (const auto& cls_a : classes) {
    for (const auto& cls_b : classes) {
      const auto comp = complementary_class(cls_a);
      const bool complementary = comp.has_value() && *comp == cls_b;
      const double bound =
          1.0 + (complementary ? 1.0 / cls_a.cardinality() : 0.0);
      for (int trial = 0; trial < 20; ++trial) {
        const PureState product = tensor(random_in_class(cls_a), random_in_class(cls_b));
        const double sum = fidelity_input(product) + fidelity_dft(product);
        CHECK(sum <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("ideal state spreads the defect evenly over classes") {
  // Within the ideal state, every complementary class block carries mass
  // d / binom(M, N), so mass / d is class independent.
  for (int modes = 2; modes <= 6; ++modes) {
    for (int n = 1; n < modes; ++n) {
      const PureState phi = phi_partition(modes, n);
      const FockBasis& ba = phi.basis_a();
      const double expected = 1.0 / to_double(Rational(binomial_exact(modes, n)));
      for (const auto& cls : enumerate_classes(ba)) {
        if (!cls.single_occupancy()) {
          continue;
        }
        const auto comp = complementary_class(cls);
        REQUIRE(comp.has_value());
        double mass = 0.0;
        for (const auto& ea : cls.elements()) {
          for (const auto& eb : comp->elements()) {
            mass += joint_probability(phi, ea, eb);
          }
        }
        CHECK(std::abs(mass / cls.cardinality() - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("report fields stay inside their ranges on random states") {
  std::mt19937_64 rng(606);
  const FockBasis basis(4, 2);
  const auto classes = enumerate_classes(basis);
  for (int trial = 0; trial < 40; ++trial) {
    PureState psi = fockwitness::testing::random_joint_state(basis, basis, rng);
    if (trial % 3 == 0) {
      psi = sample_product_state(basis, basis, rng());
    }
    const WitnessReport r = evaluate(psi);
    CHECK(r.fidelity_input >= -1e-12);
    CHECK(r.fidelity_input <= 1.0 + 1e-12);
    CHECK(r.fidelity_dft >= -1e-12);
    CHECK(r.fidelity_dft <= 1.0 + 1e-12);
    CHECK(r.pattern_defect >= -1e-12);

    // The defect never exceeds the total complementary-block mass.
    double block_mass = 0.0;
    for (const auto& cls : classes) {
      if (!cls.single_occupancy()) {
        continue;
      }
      const auto comp = complementary_class(cls);
      for (const auto& ea : cls.elements()) {
        for (const auto& eb : comp->elements()) {
          block_mass += joint_probability(psi, ea, eb);
        }
      }
    }
    CHECK(r.pattern_defect <= block_mass + 1e-12);
    CHECK(block_mass <= 1.0 + 1e-12);

    CHECK(r.entangled_by_optimized == (r.witness_value > 0.0));
    CHECK(r.optimized_lhs ==
          doctest::Approx(r.fidelity_input - r.pattern_defect + r.fidelity_dft)
              .epsilon(1e-14));
  }
}

TEST_CASE("evaluate rejects mismatched partitions") {
  std::mt19937_64 rng(5);
  const PureState bad = fockwitness::testing::random_joint_state(FockBasis(4, 2),
                                                                 FockBasis(4, 1), rng);
  CHECK_THROWS_AS(evaluate(bad), std::domain_error);
  const PureState local = fockwitness::testing::random_local_state(FockBasis(4, 2), rng);
  CHECK_THROWS_AS(fidelity_input(local), std::domain_error);
}
