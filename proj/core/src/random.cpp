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

#include "ccd/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ccd/errors.hpp"

namespace ccd {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

namespace {

// Orthonormalizes the columns of a (row-major, dim x dim) in place with two
// passes of classical Gram-Schmidt. The implied R has a positive real
// diagonal, which is the phase convention that makes Q Haar distributed.
template <typename T>
void orthonormalize_columns(std::vector<T>& a, std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        T proj{};
        for (std::size_t r = 0; r < dim; ++r) {
          if constexpr (std::is_same_v<T, cplx>) {
            proj += std::conj(a[r * dim + k]) * a[r * dim + j];
          } else {
            proj += a[r * dim + k] * a[r * dim + j];
          }
        }
        for (std::size_t r = 0; r < dim; ++r) a[r * dim + j] -= proj * a[r * dim + k];
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(a[r * dim + j]);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalInconsistency("Gram-Schmidt: rank-deficient sample");
    for (std::size_t r = 0; r < dim; ++r) a[r * dim + j] /= norm;
  }
}

}  // namespace

ComplexMatrix random_special_unitary(unsigned n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return random_special_unitary(n_qubits, rng);
}

ComplexMatrix random_special_unitary(unsigned n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw SizeError("random_special_unitary: n_qubits must be in [1, " +
                    std::to_string(kMaxDenseQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cplx> a(dim * dim);
  for (auto& z : a) z = rng.complex_normal();
  orthonormalize_columns(a, dim);
  ComplexMatrix q(dim, std::move(a));
  const cplx det = determinant(q);
  q *= std::polar(1.0, -std::arg(det) / static_cast<double>(dim));
  return q;
}

RealMatrix random_special_orthogonal(std::size_t dim, Rng& rng) {
  std::vector<double> a(dim * dim);
  for (auto& x : a) x = rng.normal();
  orthonormalize_columns(a, dim);
  RealMatrix q(dim);
  std::copy(a.begin(), a.end(), q.data().begin());
  if (determinant(q) < 0.0) {
    for (std::size_t r = 0; r < dim; ++r) q(r, 0) = -q(r, 0);
  }
  return q;
}

ComplexMatrix random_su2(Rng& rng) {
  // Uniform unit quaternion (a, b, c, d) -> [[a + ib, c + id], [-c + id, a - ib]].
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : q) {
      x = rng.normal();
      norm += x * x;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (double& x : q) x /= norm;
  return ComplexMatrix{{cplx{q[0], q[1]}, cplx{q[2], q[3]}},
                       {cplx{-q[2], q[3]}, cplx{q[0], -q[1]}}};
}

ComplexMatrix random_local_unitary(unsigned n_qubits, Rng& rng) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(n_qubits);
  for (unsigned j = 0; j < n_qubits; ++j) factors.push_back(random_su2(rng));
  return kron(factors);
}

}  // namespace ccd
