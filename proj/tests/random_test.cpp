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

#include "ccd/errors.hpp"
#include "ccd/random.hpp"

namespace ccd {
namespace {

TEST(RandomUnitary, UnitaryWithUnitDeterminant) {
  for (unsigned n = 1; n <= 6; ++n) {
    const ComplexMatrix v = random_special_unitary(n, 20260418 + n);
    EXPECT_LT(unitarity_defect(v), 1e-10) << n;
    EXPECT_LT(std::abs(determinant(v) - 1.0), n == 1 ? 1e-12 : 1e-10) << n;
  }
}

TEST(RandomUnitary, SameSeedIsBitIdentical) {
  const ComplexMatrix a = random_special_unitary(3, 99);
  const ComplexMatrix b = random_special_unitary(3, 99);
  ASSERT_EQ(a.data().size(), b.data().size());
  for (std::size_t j = 0; j < a.data().size(); ++j) EXPECT_EQ(a.data()[j], b.data()[j]);
  const ComplexMatrix c = random_special_unitary(3, 100);
  EXPECT_GT(frobenius_distance(a, c), 0.1);
}

TEST(RandomUnitary, SizeLimits) {
  EXPECT_THROW(random_special_unitary(0, 1), SizeError);
  EXPECT_THROW(random_special_unitary(13, 1), SizeError);
}

// Haar second moment: E|tr v|^2 = 1 for U(N); fixing det = 1 leaves it
// unchanged for N >= 2.
TEST(RandomUnitary, TraceSecondMoment) {
  Rng rng(31);
  const int samples = 2000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < samples; ++t) {
    const double x = std::norm(trace(random_special_unitary(2, rng)));
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
  EXPECT_NEAR(mean, 1.0, 3.0 * se);
}

TEST(RandomOrthogonal, SpecialOrthogonal) {
  Rng rng(32);
  for (std::size_t dim : {2u, 3u, 10u, 64u}) {
    const RealMatrix o = random_special_orthogonal(dim, rng);
    EXPECT_LT(orthogonality_defect(o), 1e-12);
    EXPECT_NEAR(determinant(o), 1.0, 1e-10);
  }
}

TEST(RandomLocal, TensorOfSu2) {
  Rng rng(33);
  const ComplexMatrix g = random_su2(rng);
  EXPECT_LT(unitarity_defect(g), 1e-14);
  EXPECT_NEAR(std::abs(determinant(g) - 1.0), 0.0, 1e-14);
  const ComplexMatrix l = random_local_unitary(4, rng);
  EXPECT_EQ(l.dim(), 16U);
  EXPECT_LT(unitarity_defect(l), 1e-12);
}

TEST(Substreams, IndependentOfConsumptionOrder) {
  Rng a = Rng::substream(7, 3);
  Rng b = Rng::substream(7, 3);
  Rng c = Rng::substream(7, 4);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Rng::substream(7, 3).next(), c.next());
  EXPECT_NE(Rng::substream(8, 3).next(), Rng::substream(7, 3).next());
}

TEST(Substreams, UniformInUnitInterval) {
  Rng rng(34);
  for (int j = 0; j < 10000; ++j) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace ccd
