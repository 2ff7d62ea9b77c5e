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

#include "ccd/errors.hpp"
#include "ccd/linalg.hpp"
#include "ccd/random.hpp"
#include "test_support.hpp"

namespace ccd {
namespace {

using testing::random_complex_matrix;

TEST(DenseAlgebra, IdentityIsNeutral) {
  Rng rng(11);
  const ComplexMatrix v = random_complex_matrix(8, rng);
  EXPECT_EQ(multiply(ComplexMatrix::identity(8), v).data().size(), v.data().size());
  EXPECT_DOUBLE_EQ(frobenius_distance(multiply(ComplexMatrix::identity(8), v), v), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_distance(multiply(v, ComplexMatrix::identity(8)), v), 0.0);
}

TEST(DenseAlgebra, DeterminantOfDiagonal) {
  const ComplexMatrix m{{cplx{0, 1}, 0.0}, {0.0, cplx{0, -1}}};
  EXPECT_NEAR(std::abs(determinant(m) - 1.0), 0.0, 1e-15);
}

TEST(DenseAlgebra, AdjointRoundTrip) {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix v = random_complex_matrix(16, rng);
    EXPECT_EQ(frobenius_distance(adjoint(adjoint(v)), v), 0.0);
    EXPECT_EQ(frobenius_distance(transpose(transpose(v)), v), 0.0);
    EXPECT_EQ(frobenius_distance(conjugate(transpose(v)), adjoint(v)), 0.0);
  }
}

TEST(DenseAlgebra, ProductMatchesSchoolbook) {
  Rng rng(13);
  const ComplexMatrix a = random_complex_matrix(16, rng);
  const ComplexMatrix b = random_complex_matrix(16, rng);
  EXPECT_LT(frobenius_distance(multiply(a, b), testing::naive_multiply(a, b)), 1e-12);
}

TEST(DenseAlgebra, DeterminantMatchesCofactorExpansion) {
  Rng rng(14);
  for (std::size_t dim : {2u, 4u}) {
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix m = random_complex_matrix(dim, rng);
      const cplx expected = testing::cofactor_determinant(testing::rows_of(m));
      EXPECT_LT(std::abs(determinant(m) - expected), 1e-12 * (1.0 + std::abs(expected)));
    }
  }
  // Pivoting is needed here: the leading entry is zero.
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_NEAR(determinant(swap).real(), -1.0, 1e-15);
}

TEST(DenseAlgebra, DeterminantIsMultiplicative) {
  Rng rng(15);
  const ComplexMatrix a = random_complex_matrix(8, rng);
  const ComplexMatrix b = random_complex_matrix(8, rng);
  const cplx lhs = determinant(multiply(a, b));
  const cplx rhs = determinant(a) * determinant(b);
  EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::abs(rhs));
}

TEST(DenseAlgebra, KronOfPerQubitFactors) {
  const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  const ComplexMatrix xz = kron(x, z);
  // (X (x) Z)|01> = -|11> with qubit 1 most significant.
  EXPECT_EQ(xz(3, 1), cplx(-1.0, 0.0));
  EXPECT_EQ(xz(2, 0), cplx(1.0, 0.0));
  const std::vector<ComplexMatrix> factors{x, z, x};
  const ComplexMatrix xzx = kron(factors);
  EXPECT_EQ(xzx.n_qubits(), 3U);
  EXPECT_EQ(frobenius_distance(xzx, kron(xz, x)), 0.0);
}

TEST(DenseAlgebra, FrobeniusDistanceDefinition) {
  const ComplexMatrix a{{1.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix b{{cplx{1.0, 1.0}, 2.0}, {0.0, 1.0}};
  EXPECT_NEAR(frobenius_distance(a, b), std::sqrt(5.0), 1e-15);
}

TEST(DenseAlgebra, ShapeErrors) {
  EXPECT_THROW(multiply(ComplexMatrix::identity(2), ComplexMatrix::identity(4)), ShapeError);
  EXPECT_THROW(ComplexMatrix(3), ShapeError);
  EXPECT_THROW(qubits_for_dim(6), ShapeError);
  EXPECT_THROW(ComplexMatrix(2, std::vector<cplx>(3)), ShapeError);
}

TEST(DenseAlgebra, RejectsNonFiniteEntries) {
  std::vector<cplx> entries(4, 0.0);
  entries[1] = cplx{std::nan(""), 0.0};
  EXPECT_THROW(ComplexMatrix(2, entries), PreconditionError);
}

TEST(DenseAlgebra, KronRespectsSizeCap) {
  std::vector<ComplexMatrix> factors(kMaxDenseQubits + 1, ComplexMatrix::identity(2));
  EXPECT_THROW(kron(factors), SizeError);
}

}  // namespace
}  // namespace ccd
