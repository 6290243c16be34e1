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

// Acceptance suite: every release-gating number and property, one line of
// output per criterion. Exits nonzero if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockwitness/entangle.hpp"
#include "fockwitness/patterns.hpp"
#include "fockwitness/permanent.hpp"
#include "fockwitness/unitary.hpp"
#include "fockwitness/witness.hpp"
#include "oracle.hpp"

using namespace fockwitness;

namespace {

struct Runner {
  int failures = 0;

  void criterion(int number, const std::string& name, const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = true;
    try {
      body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail << " unexpected exception: " << e.what();
    }
    if (!detail.str().empty() && detail.str().find("FAIL") != std::string::npos) {
      ok = false;
    }
    std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                ok ? "" : Runner::render(detail).c_str());
    std::fflush(stdout);
    if (!ok) {
      ++failures;
    }
  }

  static std::string render(const std::ostringstream& detail) {
    return detail.str().empty() ? "" : (" |" + detail.str());
  }
};

void expect(std::ostringstream& log, bool condition, const std::string& what) {
  if (!condition) {
    log << " FAIL(" << what << ")";
  }
}

void expect_near(std::ostringstream& log, double value, double target, double tol,
                 const std::string& what) {
  if (!(std::abs(value - target) <= tol)) {
    log << " FAIL(" << what << ": " << value << " vs " << target << ")";
  }
}

}  // namespace

int main() {
  Runner run;

  // -------------------------------------------------------------------------
  run.criterion(1, "partition statistics for M=4", [](std::ostringstream& log) {
    const Rational expected[] = {Rational(1, 16), Rational(1, 4), Rational(3, 8),
                                 Rational(1, 4), Rational(1, 16)};
    for (int n = 0; n <= 4; ++n) {
      expect(log, partition_probability(4, n) == expected[n],
             "P(4," + std::to_string(n) + ") exact");
      expect_near(log, to_double(partition_probability(4, n)), to_double(expected[n]), 1e-12,
                  "P(4," + std::to_string(n) + ") double");
    }
    const Rational zero = partition_probability(4, 0) + partition_probability(4, 4);
    expect(log, zero == Rational(1, 8), "zero-photon partition = 1/8");
    expect(log, Rational(1) - zero == Rational(7, 8), "usable partition = 7/8");
  });

  // -------------------------------------------------------------------------
  run.criterion(2, "ideal-state input correlations and Schmidt rank",
                [](std::ostringstream& log) {
    const PureState phi = phi_partition(4, 2);
    int nonzero = 0;
    for (size_t ia = 0; ia < 10; ++ia) {
      for (size_t ib = 0; ib < 10; ++ib) {
        const double p = std::norm(phi.amplitude(static_cast<Eigen::Index>(ia),
                                                 static_cast<Eigen::Index>(ib)));
        if (p < 1e-10) {
          continue;
        }
        ++nonzero;
        expect_near(log, p, 1.0 / 6.0, 1e-10, "entry probability");
        const PhotonPattern& pa = phi.basis_a().pattern(ia);
        expect(log, pa.single_occupancy() && phi.basis_b().pattern(ib) == pa.complement(),
               "support on complementary pairs");
      }
    }
    expect(log, nonzero == 6, "exactly 6 nonzero entries");
    expect(log, schmidt_rank(phi) == 6, "Schmidt rank 6");
  });

  // -------------------------------------------------------------------------
  run.criterion(3, "DFT K-value correlations of the ideal state",
                [](std::ostringstream& log) {
    const PureState out = apply(ModeUnitary::dft(4), phi_partition(4, 2), Side::Both);
    const FockBasis& ba = out.basis_a();
    const FockBasis& bb = out.basis_b();
    double matched = 0.0;
    double block_mass[4][4] = {};
    for (size_t ia = 0; ia < ba.size(); ++ia) {
      for (size_t ib = 0; ib < bb.size(); ++ib) {
        const double p = std::norm(out.amplitude(static_cast<Eigen::Index>(ia),
                                                 static_cast<Eigen::Index>(ib)));
        const int ka = k_value(ba.pattern(ia));
        const int kb = k_value(bb.pattern(ib));
        block_mass[ka][kb] += p;
        if ((ka + kb) % 4 == 0) {
          matched += p;
        }
      }
    }
    expect_near(log, matched, 1.0, 1e-10, "total probability on K_A + K_B = 0 (mod 4)");
    for (int ka = 0; ka < 4; ++ka) {
      for (int kb = 0; kb < 4; ++kb) {
        if ((ka + kb) % 4 != 0) {
          expect(log, block_mass[ka][kb] < 1e-12,
                 "forbidden block (" + std::to_string(ka) + "," + std::to_string(kb) + ")");
        }
      }
    }
  });

  // -------------------------------------------------------------------------
  run.criterion(4, "class eigenstate algebra", [](std::ostringstream& log) {
    const FockBasis basis(4, 2);
    const auto i1010 = static_cast<Eigen::Index>(*basis.index_of(PhotonPattern({1, 0, 1, 0})));
    const auto i0101 = static_cast<Eigen::Index>(*basis.index_of(PhotonPattern({0, 1, 0, 1})));
    const double s = 1.0 / std::sqrt(2.0);

    const PureState even = class_eigenstate(PhotonPattern({1, 0, 1, 0}), 0);
    expect(log, std::abs(even.amplitude(i1010) - Complex(s, 0)) < 1e-12 &&
                    std::abs(even.amplitude(i0101) - Complex(s, 0)) < 1e-12,
           "K=0 eigenstate of the 1010 class");
    const PureState odd = class_eigenstate(PhotonPattern({1, 0, 1, 0}), 2);
    expect(log, std::abs(odd.amplitude(i1010) - Complex(s, 0)) < 1e-12 &&
                    std::abs(odd.amplitude(i0101) - Complex(-s, 0)) < 1e-12,
           "K=2 eigenstate of the 1010 class");

    const auto terms = decompose_dft_output(PhotonPattern({1, 1, 0, 0}));
    expect(log, terms.size() == 2, "two classes in the 1100 pre-image");
    const Complex phase(std::cos(-std::numbers::pi / 4), std::sin(-std::numbers::pi / 4));
    if (terms.size() == 2) {
      expect(log, std::abs(terms[0].coefficient - Complex(s, 0)) < 1e-10,
             "coefficient 1/sqrt(2) on the 2000 class");
      expect(log, std::abs(terms[1].coefficient - s * phase) < 1e-10,
             "coefficient exp(-i pi/4)/sqrt(2) on the 1100 class");
    }
    const auto mirrored = decompose_dft_output(PhotonPattern({0, 0, 1, 1}));
    expect(log, mirrored.size() == 2 &&
                    std::abs(mirrored[1].coefficient + s * phase) < 1e-10,
           "sign-flipped coefficient for 0011");

    const PureState a = class_eigenstate(PhotonPattern({1, 1, 0, 0}), 1);
    const PureState b = class_eigenstate(PhotonPattern({0, 0, 1, 1}), 1);
    expect(log, (a.amplitudes() + b.amplitudes()).cwiseAbs().maxCoeff() < 1e-12,
           "anchor flip gives the opposite global sign");
  });

  // -------------------------------------------------------------------------
  run.criterion(5, "fidelity and witness golden values", [](std::ostringstream& log) {
    const WitnessReport ideal = evaluate(phi_partition(4, 2));
    expect_near(log, ideal.fidelity_input, 1.0, 1e-9, "ideal F_n");
    expect_near(log, ideal.fidelity_dft, 1.0, 1e-9, "ideal F_K");
    expect_near(log, ideal.pattern_defect, 1.0 / 3.0, 1e-9, "ideal D_p");
    expect_near(log, ideal.witness_value, 2.0 / 3.0, 1e-9, "ideal witness");

    const FockBasis basis(4, 2);
    const PureState separable =
        tensor(PureState::basis_state(basis, PhotonPattern({1, 1, 0, 0})),
               PureState::basis_state(basis, PhotonPattern({0, 0, 1, 1})));
    const WitnessReport sep = evaluate(separable);
    expect_near(log, sep.fidelity_input, 1.0, 1e-9, "separable F_n");
    expect_near(log, sep.fidelity_dft, 0.25, 1e-9, "separable F_K");
    expect_near(log, sep.pattern_defect, 0.25, 1e-9, "separable D_p");
    expect_near(log, sep.witness_value, 0.0, 1e-9, "separable witness saturates");

    const WitnessReport uniform = evaluate_uniform(4, 2);
    expect_near(log, uniform.fidelity_input, 0.06, 1e-9, "uniform F_n");
    expect_near(log, uniform.fidelity_dft, 0.26, 1e-9, "uniform F_K");
    expect_near(log, uniform.pattern_defect, 0.06, 1e-9, "uniform D_p");
    expect_near(log, uniform.witness_value, -0.74, 1e-9, "uniform witness");

    const MixtureLaw law = mixture_threshold(4, 2);
    expect_near(log, law.slope, 211.0 / 150.0, 1e-9, "mixture slope");
    expect_near(log, law.offset, -0.74, 1e-9, "mixture offset");
    expect_near(log, law.threshold, 111.0 / 211.0, 1e-9, "mixture threshold");
    expect_near(log, law.threshold, 0.525, 2e-3, "threshold near the rounded 0.525");

    const FidelityThresholds t = state_fidelity_thresholds(4, 2);
    expect(log, t.basic == Rational(3, 4), "basic state-fidelity threshold 3/4");
    expect(log, t.tight == Rational(9, 13), "tight state-fidelity threshold 9/13");
  });

  // -------------------------------------------------------------------------
  run.criterion(6, "separable bound and witness spectrum", [](std::ostringstream& log) {
    expect(log, basic_bound(4, 2) == Rational(3, 2), "basic bound 3/2");
    expect_near(log, max_witness_eigenvalue(4, 2), 0.75, 1e-9, "max eigenvalue 3/4");
  });

  // -------------------------------------------------------------------------
  run.criterion(7, "property suites", [](std::ostringstream& log) {
    using fockwitness::testing::naive_permanent;
    using fockwitness::testing::random_complex_matrix;
    std::mt19937_64 rng(0xF0C7);

    // Ryser against the permutation-sum oracle.
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng() % 6);
      const Eigen::MatrixXcd a = random_complex_matrix(n, rng);
      const Complex fast = permanent(a);
      const Complex slow = naive_permanent(a);
      if (std::abs(fast - slow) > 1e-10 * std::max(1.0, std::abs(slow))) {
        log << " FAIL(permanent trial " << trial << ")";
        break;
      }
    }

    // Lift unitarity and the composition homomorphism.
    for (int modes = 2; modes <= 4; ++modes) {
      for (int photons = 1; photons <= 3; ++photons) {
        const FockBasis basis(modes, photons);
        const Eigen::MatrixXcd l = lift(ModeUnitary::dft(modes), basis).matrix();
        const double residual =
            (l.adjoint() * l -
             Eigen::MatrixXcd::Identity(l.rows(), l.cols())).cwiseAbs().maxCoeff();
        expect(log, residual < 1e-9,
               "lift unitarity at (" + std::to_string(modes) + "," + std::to_string(photons) + ")");
      }
    }
    {
      const FockBasis basis(3, 2);
      for (int trial = 0; trial < 5; ++trial) {
        const ModeUnitary u{fockwitness::testing::haar_unitary(3, rng)};
        const ModeUnitary v{fockwitness::testing::haar_unitary(3, rng)};
        const Eigen::MatrixXcd lhs = lift(u * v, basis).matrix();
        const Eigen::MatrixXcd rhs = lift(u, basis).matrix() * lift(v, basis).matrix();
        expect(log, (lhs - rhs).cwiseAbs().maxCoeff() < 1e-8, "lift homomorphism");
      }
    }

    // Output statistics are blind to input mode shifts.
    for (int modes = 2; modes <= 5; ++modes) {
      const FockBasis basis(modes, 2);
      const ModeUnitary f = ModeUnitary::dft(modes);
      const ModeUnitary s = ModeUnitary::mode_shift(modes);
      for (int trial = 0; trial < 3; ++trial) {
        PureState psi = fockwitness::testing::random_local_state(basis, rng);
        const Eigen::VectorXd reference = apply(f, psi, Side::A).amplitudes().cwiseAbs2();
        for (int dm = 1; dm < modes; ++dm) {
          psi = apply(s, psi, Side::A);
          const Eigen::VectorXd probs = apply(f, psi, Side::A).amplitudes().cwiseAbs2();
          expect(log, (probs - reference).cwiseAbs().maxCoeff() < 1e-10,
                 "shift invariance at M=" + std::to_string(modes));
        }
      }
    }

    // Suppression of K != 0 outputs for every shift-invariant input.
    for (int modes = 2; modes <= 6; ++modes) {
      for (int per_mode = 1; per_mode <= (modes <= 3 ? 2 : 1); ++per_mode) {
        const PhotonPattern uniform(std::vector<int>(static_cast<size_t>(modes), per_mode));
        const FockBasis basis(modes, uniform.photons());
        const PureState out =
            apply(ModeUnitary::dft(modes), PureState::basis_state(basis, uniform), Side::A);
        double leaked = 0.0;
        for (size_t i = 0; i < basis.size(); ++i) {
          if (k_value(basis.pattern(i)) != 0) {
            leaked = std::max(leaked, std::norm(out.amplitude(static_cast<Eigen::Index>(i))));
          }
        }
        expect(log, leaked < 1e-12, "suppression at M=" + std::to_string(modes) +
                                        " occupancy " + std::to_string(per_mode));
      }
    }

    // Sampled separable states never cross the bound.
    {
      const FockBasis basis(4, 2);
      double worst = -1.0;
      for (std::uint64_t i = 0; i < 1000; ++i) {
        const PureState product = sample_product_state(basis, basis, 0xF0C7000 + i);
        worst = std::max(worst, evaluate(product).witness_value);
      }
      expect(log, worst <= 1e-9, "1000 product states stay below the bound");
    }

    // The ideal state feeds every complementary class in proportion to its
    // cardinality.
    for (int modes = 2; modes <= 6; ++modes) {
      for (int n = 1; n < modes; ++n) {
        const PureState phi = phi_partition(modes, n);
        const double expected = 1.0 / to_double(Rational(binomial_exact(modes, n)));
        for (const auto& cls : enumerate_classes(phi.basis_a())) {
          if (!cls.single_occupancy()) {
            continue;
          }
          const auto comp = complementary_class(cls);
          double mass = 0.0;
          for (const auto& ea : cls.elements()) {
            for (const auto& eb : comp->elements()) {
              mass += joint_probability(phi, ea, eb);
            }
          }
          expect(log, std::abs(mass / cls.cardinality() - expected) < 1e-12,
                 "class identity at (" + std::to_string(modes) + "," + std::to_string(n) + ")");
        }
      }
    }
  });

  // -------------------------------------------------------------------------
  run.criterion(8, "scaling smoke test at (6,3)", [](std::ostringstream& log) {
    const auto start = std::chrono::steady_clock::now();
    const StratifiedState psi = generate_psi(6);
    const PureState phi = psi.project(3);
    const WitnessReport report = evaluate(phi);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(log, report.witness_value > 0.0, "positive witness value");
    expect_near(log, report.witness_value, 0.8, 1e-9, "witness value 4/5");
    expect(log, seconds < 30.0, "pipeline under 30 s (took " + std::to_string(seconds) + ")");
  });

  if (run.failures > 0) {
    std::printf("%d criterion(s) failed\n", run.failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
