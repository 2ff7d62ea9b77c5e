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
#include <numbers>

#include "ccd/capacity.hpp"
#include "ccd/cartan.hpp"
#include "ccd/decomposition.hpp"
#include "ccd/errors.hpp"
#include "ccd/intertwiners.hpp"
#include "ccd/random.hpp"
#include "test_support.hpp"

namespace ccd {
namespace {

ComplexMatrix reconstruct(const CcdFactors& f) { return multiply(multiply(f.k1, f.a), f.k2); }

TEST(UnitarySvd, IdentityIsTrivial) {
  const UnitarySvd r = unitary_svd(ComplexMatrix::identity(8));
  EXPECT_LT(frobenius_distance(r.o1, RealMatrix::identity(8)), 1e-12);
  EXPECT_LT(frobenius_distance(r.o2, RealMatrix::identity(8)), 1e-12);
  for (const cplx& z : r.d) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-12);
}

TEST(UnitarySvd, PlantedRoundTrip) {
  Rng rng(71);
  for (std::size_t dim : {4u, 16u, 32u}) {
    const RealMatrix o = random_special_orthogonal(dim, rng);
    const RealMatrix o2 = random_special_orthogonal(dim, rng);
    std::vector<cplx> d(dim);
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < dim; ++j) {
      const double a = 2.0 * std::numbers::pi * rng.uniform();
      total += a;
      d[j] = std::polar(1.0, a);
    }
    d[dim - 1] = std::polar(1.0, -total);  // det v = 1
    const ComplexMatrix v = multiply(multiply(to_complex(o), ComplexMatrix::diagonal(d)),
                                     to_complex(o2));
    const UnitarySvd r = unitary_svd(v);
    EXPECT_LE(r.residual, 1e-9) << dim;
    EXPECT_NEAR(determinant(r.o1), 1.0, 1e-9);
    EXPECT_NEAR(determinant(r.o2), 1.0, 1e-9);
    // The squares d_j^2 are the invariant part of the diagonal.
    std::vector<cplx> planted_sq;
    std::vector<cplx> found_sq;
    for (const cplx& z : d) planted_sq.push_back(z * z);
    for (const cplx& z : r.d) found_sq.push_back(z * z);
    EXPECT_TRUE(spectra_match(planted_sq, found_sq, 1e-8)) << dim;
  }
}

TEST(UnitarySvd, RealOrthogonalGivesSigns) {
  Rng rng(72);
  const RealMatrix o = random_special_orthogonal(16, rng);
  const UnitarySvd r = unitary_svd(to_complex(o));
  EXPECT_LE(r.residual, 1e-9);
  int minus = 0;
  for (const cplx& z : r.d) {
    EXPECT_NEAR(std::abs(z.imag()), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(z.real()), 1.0, 1e-9);
    if (z.real() < 0) ++minus;
  }
  EXPECT_EQ(minus % 2, 0);
}

TEST(Ccd, RandomRoundTrip) {
  for (unsigned n : {2u, 4u, 6u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ComplexMatrix v = random_special_unitary(n, 1000 * n + seed);
      const CcdFactors f = ccd(v);
      const double dim = static_cast<double>(v.dim());
      EXPECT_LE(frobenius_distance(reconstruct(f), v), 1e-8 * dim) << n << " " << seed;
      EXPECT_LE(f.residual, 1e-8 * dim);
      EXPECT_TRUE(is_in_K(f.k1));
      EXPECT_TRUE(is_in_K(f.k2));
      EXPECT_LT(a_group_defect(f.a), 1e-9);
      EXPECT_LT(std::abs(determinant(f.a) - 1.0), 1e-8);
    }
  }
}

TEST(Ccd, KInputHasSignDiagonal) {
  Rng rng(73);
  for (unsigned n : {2u, 4u}) {
    const ComplexMatrix k = testing::random_k_element(n, rng);
    const CcdFactors f = ccd(k);
    for (const cplx& z : f.d) EXPECT_NEAR(std::abs(z * z - 1.0), 0.0, 1e-8);
    EXPECT_LT(frobenius_distance(multiply(f.a, f.a), ComplexMatrix::identity(k.dim())), 1e-8);
    for (const cplx& p : concurrence_spectrum(k).points) EXPECT_NEAR(std::abs(p - 1.0), 0.0, 1e-8);
  }
}

TEST(Ccd, AElementRoundTrip) {
  Rng rng(74);
  const ABasis basis = build_a_basis(4);
  std::vector<double> coeffs(basis.size());
  for (double& c : coeffs) c = rng.normal();
  const ComplexMatrix a = exp_a(basis, coeffs);
  const CcdFactors f = ccd(a);
  EXPECT_LE(frobenius_distance(reconstruct(f), a), 1e-8);
  EXPECT_TRUE(is_in_K(f.k1));
  EXPECT_TRUE(is_in_K(f.k2));
  EXPECT_TRUE(spectra_match(concurrence_spectrum(f.a).points, concurrence_spectrum(a).points,
                            1e-8));
}

TEST(Ccd, TwoQubitFactorsAreLocalUpToEntangler) {
  // For n = 2, E0^dag k E0 is real orthogonal, i.e. k lies in SU(2) x SU(2).
  const ComplexMatrix e = build_standard_entangler(2).matrix;
  const CcdFactors f = ccd(random_special_unitary(2, 75));
  for (const ComplexMatrix* k : {&f.k1, &f.k2}) {
    const ComplexMatrix o = multiply(multiply(adjoint(e), *k), e);
    EXPECT_LT(max_imag(o), 1e-9);
    EXPECT_LT(orthogonality_defect(real_part(o)), 1e-9);
  }
}

TEST(Ccd, Errors) {
  EXPECT_THROW(ccd(random_special_unitary(3, 1)), UnsupportedParity);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = 0.5;
  EXPECT_THROW(ccd(m), PreconditionError);
  EXPECT_THROW(ccd(random_special_unitary(2, 76), {}, 1e-30), NumericalInconsistency);
}

}  // namespace
}  // namespace ccd
