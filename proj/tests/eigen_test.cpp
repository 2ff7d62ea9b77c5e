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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccd/eigen.hpp"
#include "ccd/errors.hpp"
#include "ccd/forms.hpp"
#include "ccd/random.hpp"

namespace ccd {
namespace {

RealMatrix reconstruct(const RealMatrix& basis, const std::vector<double>& values) {
  const std::size_t n = basis.dim();
  RealMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += basis(i, k) * values[k] * basis(j, k);
      out(i, j) = s;
    }
  return out;
}

TEST(Jacobi, IdentityIsFixed) {
  const EigenPair e = jacobi_eigh(RealSymmetricMatrix::from_dense(RealMatrix::identity(5)));
  for (double v : e.values) EXPECT_DOUBLE_EQ(v, 1.0);
  EXPECT_DOUBLE_EQ(frobenius_distance(e.basis, RealMatrix::identity(5)), 0.0);
}

TEST(Jacobi, TwoByTwoPermutation) {
  RealMatrix m(2);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  const EigenPair e = jacobi_eigh(RealSymmetricMatrix::from_dense(m));
  EXPECT_DOUBLE_EQ(e.values[0], 1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 3.0);
  EXPECT_NEAR(std::abs(e.basis(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.basis(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(determinant(e.basis), 1.0, 1e-15);
}

TEST(Jacobi, RecoversPlantedSpectrum) {
  Rng rng(21);
  for (std::size_t dim : {3u, 8u, 17u, 32u}) {
    const RealMatrix o = random_special_orthogonal(dim, rng);
    std::vector<double> w(dim);
    for (double& x : w) x = 4.0 * rng.uniform() - 2.0;
    const RealMatrix planted = reconstruct(o, w);
    const EigenPair e = jacobi_eigh(RealSymmetricMatrix::from_dense(planted));
    std::sort(w.begin(), w.end());
    for (std::size_t j = 0; j < dim; ++j) EXPECT_NEAR(e.values[j], w[j], 1e-10);
    EXPECT_LT(orthogonality_defect(e.basis), 1e-12);
    EXPECT_NEAR(determinant(e.basis), 1.0, 1e-10);
    EXPECT_LT(frobenius_distance(reconstruct(e.basis, e.values), planted), 1e-10);
  }
}

TEST(Jacobi, SweepBudgetExhaustionThrows) {
  Rng rng(22);
  const RealMatrix o = random_special_orthogonal(12, rng);
  std::vector<double> w(12);
  for (double& x : w) x = rng.normal();
  JacobiOptions opts;
  opts.max_sweeps = 1;
  opts.tolerance = 1e-15;
  EXPECT_THROW(jacobi_eigh(RealSymmetricMatrix::from_dense(reconstruct(o, w)), opts),
               ConvergenceError);
}

TEST(HermitianEigen, ReconstructsRandomHermitian) {
  Rng rng(23);
  ComplexMatrix h(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      const cplx z = i == j ? cplx{rng.normal(), 0.0} : rng.complex_normal();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  const HermitianEigen e = hermitian_eigh(h);
  ComplexMatrix d(8);
  for (std::size_t j = 0; j < 8; ++j) d(j, j) = e.values[j];
  EXPECT_LT(frobenius_distance(multiply(multiply(e.basis, d), adjoint(e.basis)), h), 1e-10);
  EXPECT_LT(unitarity_defect(e.basis), 1e-12);
  EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
}

TEST(HermitianEigen, RejectsNonHermitian) {
  const ComplexMatrix m{{0.0, 1.0}, {0.0, 0.0}};
  EXPECT_THROW(hermitian_eigh(m), PreconditionError);
}

TEST(SingularValues, DiagonalAndRectangular) {
  const std::vector<cplx> diag{cplx{0, 3}, 0.0, 0.0, -2.0};
  const auto s = singular_values(diag, 2, 2);
  EXPECT_NEAR(s[0], 3.0, 1e-15);
  EXPECT_NEAR(s[1], 2.0, 1e-15);
  // Rank-one 3x2: outer product of (1,1,1) and (1,0) has sigma = sqrt(3).
  const std::vector<cplx> r1{1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
  const auto t = singular_values(r1, 3, 2);
  EXPECT_NEAR(t[0], std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(t[1], 0.0, 1e-14);
}

TEST(ExpAntiHermitian, PauliRotation) {
  // exp(i a X) = cos a I + i sin a X.
  const double a = 0.37;
  const ComplexMatrix x{{0.0, cplx{0, a}}, {cplx{0, a}, 0.0}};
  const ComplexMatrix u = exp_anti_hermitian(x);
  EXPECT_NEAR(std::abs(u(0, 0) - std::cos(a)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(0, 1) - cplx(0, std::sin(a))), 0.0, 1e-14);
  EXPECT_LT(unitarity_defect(u), 1e-14);
}

TEST(SymmetricUnitary, IdentityIsTrivial) {
  const auto r = diagonalize_symmetric_unitary(ComplexMatrix::identity(8));
  for (const cplx& z : r.values) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-14);
  EXPECT_LT(frobenius_distance(r.basis, RealMatrix::identity(8)), 1e-14);
}

TEST(SymmetricUnitary, TwoQubitSpinFlipHasPlusMinusPairs) {
  const auto r = diagonalize_symmetric_unitary(SpinFlip(2).dense());
  std::vector<double> re;
  for (const cplx& z : r.values) {
    EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -1.0, 1e-12);
  EXPECT_NEAR(re[1], -1.0, 1e-12);
  EXPECT_NEAR(re[2], 1.0, 1e-12);
  EXPECT_NEAR(re[3], 1.0, 1e-12);
  EXPECT_LT(r.residual, 1e-12);
  EXPECT_NEAR(determinant(r.basis), 1.0, 1e-12);
}

TEST(SymmetricUnitary, PlantedRoundTrip) {
  Rng rng(24);
  for (std::size_t dim : {4u, 16u, 64u}) {
    const RealMatrix o = random_special_orthogonal(dim, rng);
    std::vector<cplx> phases(dim);
    for (std::size_t j = 0; j < dim; ++j)
      phases[j] = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    // Force a degenerate cluster to exercise the restricted step.
    phases[1] = phases[0];
    const ComplexMatrix oc = to_complex(o);
    const ComplexMatrix p = multiply(multiply(oc, ComplexMatrix::diagonal(phases)), transpose(oc));
    const auto r = diagonalize_symmetric_unitary(p);
    EXPECT_LE(r.residual, 1e-9) << "dim " << dim;
    EXPECT_LT(orthogonality_defect(r.basis), 1e-10);
    const ComplexMatrix ob = to_complex(r.basis);
    const ComplexMatrix back =
        multiply(multiply(ob, ComplexMatrix::diagonal(r.values)), transpose(ob));
    EXPECT_LT(frobenius_distance(back, p), 1e-9);
  }
}

}  // namespace
}  // namespace ccd
