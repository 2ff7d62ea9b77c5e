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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ccd {

using cplx = std::complex<double>;

/// Dense dimension cap: n <= 12 qubits, N = 4096.
inline constexpr unsigned kMaxDenseQubits = 12;

/// Returns log2(dim) or throws ShapeError when dim is not a power of two.
unsigned qubits_for_dim(std::size_t dim);

/// Dense square complex matrix of dimension N = 2^n, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> values);

  std::size_t dim() const noexcept { return dim_; }
  unsigned n_qubits() const noexcept { return n_qubits_; }

  cplx& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<cplx> data() noexcept { return entries_; }
  std::span<const cplx> data() const noexcept { return entries_; }

  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar) noexcept;

 private:
  std::size_t dim_ = 0;
  unsigned n_qubits_ = 0;
  std::vector<cplx> entries_;
};

/// Dense square real matrix of arbitrary dimension, row-major. Used for
/// orthogonal bases and for eigenspace restrictions whose size is not 2^n.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  static RealMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }
  std::span<double> data() noexcept { return entries_; }
  std::span<const double> data() const noexcept { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> entries_;
};

/// Real symmetric matrix stored as its lower triangle, so symmetry is exact.
class RealSymmetricMatrix {
 public:
  RealSymmetricMatrix() = default;
  explicit RealSymmetricMatrix(std::size_t dim)
      : dim_(dim), packed_(dim * (dim + 1) / 2, 0.0) {}

  /// Symmetrizes a dense matrix as (m + m^T) / 2.
  static RealSymmetricMatrix from_dense(const RealMatrix& m);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return packed_[index(row, col)];
  }
  void set(std::size_t row, std::size_t col, double value) noexcept {
    packed_[index(row, col)] = value;
  }
  RealMatrix to_dense() const;
  double frobenius_norm() const noexcept;

 private:
  static std::size_t index(std::size_t row, std::size_t col) noexcept {
    return row >= col ? row * (row + 1) / 2 + col : col * (col + 1) / 2 + row;
  }
  std::size_t dim_ = 0;
  std::vector<double> packed_;
};

// Dense algebra. All binary operations throw ShapeError on mismatch.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix scaled(const ComplexMatrix& a, cplx scalar);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// Partially pivoted LU determinant.
cplx determinant(const ComplexMatrix& a);

/// Kronecker product of per-qubit 2x2 factors; factors[0] acts on the most
/// significant bit (qubit 1).
ComplexMatrix kron(std::span<const ComplexMatrix> factors);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v);

ComplexMatrix to_complex(const RealMatrix& m);
RealMatrix real_part(const ComplexMatrix& m);
RealMatrix imag_part(const ComplexMatrix& m);
double max_imag(const ComplexMatrix& m) noexcept;

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
double determinant(const RealMatrix& a);
double frobenius_distance(const RealMatrix& a, const RealMatrix& b);

/// ||a^dagger a - I||_F.
double unitarity_defect(const ComplexMatrix& a);
/// ||a^T a - I||_F.
double orthogonality_defect(const RealMatrix& a);

}  // namespace ccd
