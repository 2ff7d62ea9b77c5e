// Copyright 2026 The ccd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "ccd/cartan.hpp"
#include "ccd/errors.hpp"
#include "ccd/forms.hpp"
#include "ccd/monotone.hpp"
#include "ccd/random.hpp"
#include "test_support.hpp"

namespace ccd {
namespace {

// Multiplies the ket by a unit phase so that its quadratic form is real positive.
Ket phase_align(const Ket& psi) {
  const cplx q = concurrence_quadratic(psi);
  const cplx phase = std::abs(q) > 0 ? std::polar(1.0, -0.5 * std::arg(q)) : cplx{1.0};
  std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (cplx& z : amps) z *= phase;
  return Ket(amps);
}

TEST(MixedConcurrence, PureStates) {
  EXPECT_NEAR(mixed_concurrence(DensityMatrix::pure(ghz_state(2))), 1.0, 1e-8);
  EXPECT_NEAR(mixed_concurrence(DensityMatrix::pure(ghz_state(4))), 1.0, 1e-8);
  EXPECT_NEAR(mixed_concurrence(DensityMatrix::pure(w_state(2))), 1.0, 1e-8);  // Bell-type
  EXPECT_NEAR(mixed_concurrence(DensityMatrix::pure(w_state(4))), 0.0, 1e-8);
}

TEST(MixedConcurrence, MaximallyMixedVanishes) {
  EXPECT_EQ(mixed_concurrence(DensityMatrix::maximally_mixed(2)), 0.0);
  EXPECT_EQ(mixed_concurrence(DensityMatrix::maximally_mixed(4)), 0.0);
}

TEST(MixedConcurrence, WernerFamily) {
  // p |Bell><Bell| + (1-p) I/4 has concurrence max(0, (3p - 1) / 2).
  for (double p : {0.1, 1.0 / 3.0, 0.5, 0.8}) {
    const DensityMatrix rho = DensityMatrix::mix(p, DensityMatrix::pure(ghz_state(2)),
                                                 DensityMatrix::maximally_mixed(2));
    EXPECT_NEAR(mixed_concurrence(rho), std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-8) << p;
  }
}

TEST(MixedConcurrence, PureConsistencyOnRandomKets) {
  Rng rng(91);
  for (int t = 0; t < 50; ++t) {
    const Ket psi = random_ket(t % 2 == 0 ? 2 : 4, rng);
    EXPECT_NEAR(mixed_concurrence(DensityMatrix::pure(psi)), concurrence(psi), 1e-8);
  }
  EXPECT_THROW(mixed_concurrence(DensityMatrix::maximally_mixed(3)), UnsupportedParity);
}

TEST(DensityMatrix, Validation) {
  ComplexMatrix bad = ComplexMatrix::identity(2);
  EXPECT_THROW(DensityMatrix{bad}, PreconditionError);  // trace 2
  ComplexMatrix neg{{1.5, 0.0}, {0.0, -0.5}};
  EXPECT_THROW(DensityMatrix{neg}, PreconditionError);
}

TEST(Transport, IdentityCase) {
  Rng rng(92);
  const Ket psi = random_ket(2, rng);
  const TransportResult r = orbit_transport(psi, psi);
  EXPECT_LT(r.residual, 1e-12);
  EXPECT_TRUE(is_in_K(r.k));
}

TEST(Transport, LocalOrbit) {
  Rng rng(93);
  for (unsigned n : {2u, 4u}) {
    for (int t = 0; t < 10; ++t) {
      const Ket psi = random_ket(n, rng);
      const Ket phi = apply(random_local_unitary(n, rng), psi);
      const TransportResult r = orbit_transport(psi, phi);
      EXPECT_LE(r.residual, 1e-7);
      EXPECT_TRUE(is_in_K(r.k));
      std::vector<cplx> target(phi.amplitudes().begin(), phi.amplitudes().end());
      for (cplx& z : target) z *= std::polar(1.0, r.theta);
      const Ket moved = apply(r.k, psi);
      double err = 0.0;
      for (std::size_t j = 0; j < target.size(); ++j) err += std::norm(moved[j] - target[j]);
      EXPECT_NEAR(std::sqrt(err), r.residual, 1e-12);
    }
  }
}

TEST(Transport, GhzToProductOfGhz) {
  const Ket psi = phase_align(ghz_state(4));
  const Ket phi = phase_align(tensor(ghz_state(2), ghz_state(2)));
  const TransportResult r = orbit_transport(psi, phi);
  EXPECT_LE(r.residual, 1e-7);
  EXPECT_TRUE(is_in_K(r.k));
}

TEST(Transport, Errors) {
  EXPECT_THROW(orbit_transport(ghz_state(2), basis_state(2, 0)), PreconditionError);
  EXPECT_THROW(orbit_transport(ghz_state(3), ghz_state(3)), UnsupportedParity);
  EXPECT_THROW(orbit_transport(Ket({1.0, 1.0, 0.0, 0.0}), ghz_state(2)), NormalizationError);
}

TEST(Swap, Action) {
  const ComplexMatrix s = swap_operator(1, 2, 2);
  const Ket moved = apply(s, basis_state(2, 1));  // |01> -> |10>
  EXPECT_EQ(moved[2], cplx(1.0));
  EXPECT_EQ(frobenius_distance(multiply(s, s), ComplexMatrix::identity(4)), 0.0);
  EXPECT_THROW(swap_operator(1, 1, 2), ArgumentError);
  EXPECT_THROW(swap_operator(0, 1, 2), ArgumentError);
  EXPECT_THROW(swap_operator(1, 3, 2), ArgumentError);
}

TEST(Swap, PreservesConcurrence) {
  Rng rng(94);
  for (unsigned j = 1; j <= 4; ++j)
    for (unsigned k = j + 1; k <= 4; ++k) {
      const Ket psi = random_ket(4, rng);
      EXPECT_NEAR(concurrence(apply(swap_operator(j, k, 4), psi)), concurrence(psi), 1e-12);
    }
}

TEST(SingleQubit, MatchesKron) {
  Rng rng(95);
  const ComplexMatrix g = random_su2(rng);
  const Ket psi = random_ket(3, rng);
  for (unsigned q = 0; q < 3; ++q) {
    std::vector<ComplexMatrix> f(3, ComplexMatrix::identity(2));
    f[q] = g;
    const Ket a = apply_single_qubit(g, q, psi);
    const Ket b = apply(kron(f), psi);
    for (std::size_t j = 0; j < 8; ++j) EXPECT_NEAR(std::abs(a[j] - b[j]), 0.0, 1e-14);
  }
}

TEST(Povm, EqualWeightsAreStochasticUnitaries) {
  Rng rng(96);
  for (int t = 0; t < 50; ++t) {
    PovmPair povm = random_povm(2, rng);
    povm.r = povm.q;
    const Ket psi = random_ket(2, rng);
    const PovmOutcome o = povm_trial(psi, povm);
    EXPECT_NEAR(o.avg_after, o.c_before, 1e-8);
    EXPECT_LT(povm.completeness_defect(), 1e-12);
  }
}

TEST(Povm, ProjectiveMeasurementKillsGhz) {
  Rng rng(97);
  PovmPair povm = random_povm(2, rng);
  povm.q = 1.0;
  povm.r = 0.0;
  const PovmOutcome o = povm_trial(ghz_state(2), povm);
  EXPECT_NEAR(o.avg_after, 0.0, 1e-12);
  EXPECT_NEAR(o.predicted, 0.0, 1e-12);
  EXPECT_NEAR(o.p0 + o.p1, 1.0, 1e-12);
}

TEST(Povm, RandomTrialsNeverIncrease) {
  Rng rng(98);
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = t % 2 == 0 ? 2 : 4;
    const PovmPair povm = random_povm(n, rng);
    const PovmOutcome o = povm_trial(random_ket(n, rng), povm);
    ASSERT_LE(o.avg_after, o.c_before + 1e-9) << t;
    ASSERT_NEAR(o.avg_after, o.predicted, 1e-8) << t;
  }
}

TEST(Convexity, Examples) {
  const DensityMatrix ghz = DensityMatrix::pure(ghz_state(2));
  const ConvexityResult same = convexity_check(ghz, ghz, 0.3);
  EXPECT_NEAR(same.mixed, same.combined, 1e-8);
  EXPECT_TRUE(same.holds);
  const ConvexityResult half = convexity_check(ghz, DensityMatrix::maximally_mixed(2), 0.5);
  EXPECT_NEAR(half.mixed, 0.25, 1e-8);
  EXPECT_NEAR(half.combined, 0.5, 1e-8);
  EXPECT_TRUE(half.holds);
}

TEST(Convexity, RandomRankTwoMixtures) {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const DensityMatrix a = random_density(2, 2, rng);
    const DensityMatrix b = random_density(2, 2, rng);
    ASSERT_TRUE(convexity_check(a, b, rng.uniform()).holds) << t;
  }
}

TEST(Sweep, DefaultConfigurationPasses) {
  MonotoneConfig config;
  config.seed = 20260418;
  const MonotoneReport r = monotone_sweep(config);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.povm_trials, 1000U);
  EXPECT_EQ(r.povm_violations, 0U);
  EXPECT_EQ(r.convexity_violations, 0U);
  EXPECT_LT(r.max_purity_error, 1e-8);
}

}  // namespace
}  // namespace ccd
