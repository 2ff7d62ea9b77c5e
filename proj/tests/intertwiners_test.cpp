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
#include <tuple>

#include "ccd/errors.hpp"
#include "ccd/forms.hpp"
#include "ccd/intertwiners.hpp"
#include "ccd/random.hpp"
#include "test_support.hpp"

namespace ccd {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kI{0.0, 1.0};

ComplexMatrix scaled_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  ComplexMatrix m(rows);
  m *= kInvSqrt2;
  return m;
}

TEST(StandardEntangler, TwoQubitDisplay) {
  const ComplexMatrix expected = scaled_rows({{1.0, kI, 0.0, 0.0},
                                              {0.0, 0.0, 1.0, kI},
                                              {0.0, 0.0, -1.0, kI},
                                              {1.0, -kI, 0.0, 0.0}});
  const Intertwiner e = build_standard_entangler(2);
  EXPECT_LT(frobenius_distance(e.matrix, expected), 1e-15);
  EXPECT_EQ(e.phase_xi, cplx(1.0));
}

TEST(StandardEntangler, FourQubitDisplay) {
  // Nonzero entries of sqrt(2) E0 for n = 4, transcribed row by row.
  const std::vector<std::tuple<int, int, cplx>> entries{
      {0, 0, 1.0},   {0, 1, kI},    {1, 2, 1.0},   {1, 3, kI},    {2, 4, 1.0},
      {2, 5, kI},    {3, 6, 1.0},   {3, 7, kI},    {4, 8, 1.0},   {4, 9, kI},
      {5, 10, 1.0},  {5, 11, kI},   {6, 12, 1.0},  {6, 13, kI},   {7, 14, 1.0},
      {7, 15, kI},   {8, 14, -1.0}, {8, 15, kI},   {9, 12, 1.0},  {9, 13, -kI},
      {10, 10, 1.0}, {10, 11, -kI}, {11, 8, -1.0}, {11, 9, kI},   {12, 6, 1.0},
      {12, 7, -kI},  {13, 4, -1.0}, {13, 5, kI},   {14, 2, -1.0}, {14, 3, kI},
      {15, 0, 1.0},  {15, 1, -kI}};
  ComplexMatrix expected(16);
  for (const auto& [r, c, v] : entries) expected(r, c) = v * kInvSqrt2;
  EXPECT_LT(frobenius_distance(build_standard_entangler(4).matrix, expected), 1e-15);
}

TEST(StandardEntangler, TransposeProductIsAlternatingDiagonal) {
  for (unsigned n : {2u, 4u, 6u}) {
    const ComplexMatrix e = build_standard_entangler(n).matrix;
    const ComplexMatrix g = multiply(transpose(e), e);
    ComplexMatrix expected(e.dim());
    for (std::size_t j = 0; j < e.dim(); ++j) expected(j, j) = (j % 2 == 0) ? 1.0 : -1.0;
    EXPECT_LT(frobenius_distance(g, expected), 1e-13) << n;
  }
}

TEST(StandardEntangler, ColumnsArePhasedGhzStates) {
  const ComplexMatrix e = build_standard_entangler(4).matrix;
  for (std::size_t c = 0; c < 16; ++c) {
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < 16; ++r)
      if (std::abs(e(r, c)) > 1e-15) support.push_back(r);
    ASSERT_EQ(support.size(), 2U);
    EXPECT_EQ(support[0] + support[1], 15U);
    EXPECT_NEAR(std::abs(e(support[0], c)), kInvSqrt2, 1e-15);
  }
}

TEST(StandardEntangler, Errors) {
  EXPECT_THROW(build_standard_entangler(3), EntanglerNonexistent);
  EXPECT_THROW(build_standard_entangler(1), EntanglerNonexistent);
  EXPECT_THROW(build_standard_entangler(14), SizeError);
}

TEST(StandardFinagler, ThreeQubitDisplay) {
  const ComplexMatrix expected = scaled_rows({{1, 0, 0, 0, 1, 0, 0, 0},
                                              {0, 1, 0, 0, 0, -1, 0, 0},
                                              {0, 0, 1, 0, 0, 0, -1, 0},
                                              {0, 0, 0, 1, 0, 0, 0, 1},
                                              {0, 0, 0, 1, 0, 0, 0, -1},
                                              {0, 0, 1, 0, 0, 0, 1, 0},
                                              {0, 1, 0, 0, 0, 1, 0, 0},
                                              {1, 0, 0, 0, -1, 0, 0, 0}});
  EXPECT_LT(frobenius_distance(build_standard_finagler(3).matrix, expected), 1e-15);
}

TEST(StandardFinagler, RealOrthogonal) {
  for (unsigned n : {3u, 5u, 7u}) {
    const ComplexMatrix f = build_standard_finagler(n).matrix;
    EXPECT_EQ(max_imag(f), 0.0);
    EXPECT_LT(frobenius_distance(multiply(transpose(f), f), ComplexMatrix::identity(f.dim())),
              1e-10);
    EXPECT_NEAR(std::abs(determinant(f) - 1.0), 0.0, 1e-10);
    EXPECT_TRUE(certify(f, IntertwinerKind::finagler).ok);
  }
}

TEST(StandardFinagler, Errors) {
  EXPECT_THROW(build_standard_finagler(4), FinaglerArgumentError);
  EXPECT_THROW(build_standard_finagler(1), FinaglerArgumentError);
}

TEST(Certify, Examples) {
  const Certificate good = certify(build_standard_entangler(4).matrix, IntertwinerKind::entangler);
  EXPECT_TRUE(good.ok);
  EXPECT_NEAR(std::abs(good.xi - 1.0), 0.0, 1e-14);
  EXPECT_LT(good.residual, 1e-13);
  const Certificate bad = certify(ComplexMatrix::identity(4), IntertwinerKind::entangler);
  EXPECT_FALSE(bad.ok);
  EXPECT_GT(bad.residual, 1.0);
}

TEST(Certify, RightMultiplicationBySpecialOrthogonal) {
  Rng rng(51);
  const ComplexMatrix e = build_standard_entangler(4).matrix;
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix m = multiply(e, to_complex(random_special_orthogonal(16, rng)));
    EXPECT_TRUE(certify(m, IntertwinerKind::entangler).ok);
  }
}

TEST(Certify, PhasedEntanglerReportsRootOfUnity) {
  // (i E0)(i E0)^T = -S, and -1 is a fourth root of unity.
  const ComplexMatrix e = build_standard_entangler(2).matrix;
  ComplexMatrix m = e;
  m *= cplx{0.0, 1.0};
  const Certificate c = certify(m, IntertwinerKind::entangler);
  EXPECT_TRUE(c.ok);
  EXPECT_NEAR(std::abs(c.xi + 1.0), 0.0, 1e-14);
}

TEST(Certify, RejectsBadShape) {
  EXPECT_THROW(certify(ComplexMatrix(), IntertwinerKind::entangler), ShapeError);
}

TEST(Intertwiners, ConjugationCarriesKToClassicalGroups) {
  Rng rng(52);
  // Even n: k = E0 O E0^dag preserves the form and pulls back to a real orthogonal.
  const ComplexMatrix e = build_standard_entangler(4).matrix;
  const ComplexMatrix k = testing::random_k_element(4, rng);
  const SpinFlip s(4);
  EXPECT_LT(frobenius_distance(multiply(multiply(transpose(k), s.dense()), k), s.dense()), 1e-12);
  const ComplexMatrix back = multiply(multiply(adjoint(e), k), e);
  EXPECT_LT(max_imag(back), 1e-12);
  // Odd n: local unitaries preserve the form, so F0^dag k F0 is symplectic.
  const ComplexMatrix f = build_standard_finagler(3).matrix;
  const SpinFlip s3(3);
  const ComplexMatrix local = random_local_unitary(3, rng);
  EXPECT_LT(frobenius_distance(multiply(multiply(transpose(local), s3.dense()), local),
                               s3.dense()),
            1e-12);
  EXPECT_LT(symplectic_defect(multiply(multiply(adjoint(f), local), f)), 1e-12);
}

}  // namespace
}  // namespace ccd
