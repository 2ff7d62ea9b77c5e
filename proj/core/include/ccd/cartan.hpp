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

#include <cstddef>
#include <vector>

#include "ccd/linalg.hpp"

namespace ccd {

/// Sparse N x N complex matrix as a list of (row, col, value) triplets.
struct SparseEntry {
  std::size_t row;
  std::size_t col;
  cplx value;
};

struct SparseMatrix {
  std::size_t dim = 0;
  std::vector<SparseEntry> entries;

  void add(std::size_t row, std::size_t col, cplx value);
  ComplexMatrix to_dense() const;
};

inline constexpr double kAntiHermitianTolerance = 1e-8;

/// theta(x) = (-1)^n S conj(x) S. Requires x traceless anti-Hermitian.
ComplexMatrix theta(const ComplexMatrix& x, double tolerance = kAntiHermitianTolerance);

struct CartanSplit {
  ComplexMatrix k_part;  // theta-fixed
  ComplexMatrix p_part;  // theta-negated
};

CartanSplit split(const ComplexMatrix& x, double tolerance = kAntiHermitianTolerance);

inline constexpr double kMembershipTolerance = 1e-8;

/// ||v^T S v - S||_F.
double k_membership_residual(const ComplexMatrix& v);
/// v^T S v = S within tol. Requires v unitary.
bool is_in_K(const ComplexMatrix& v, double tolerance = kMembershipTolerance);

struct ABasis {
  unsigned n_qubits = 0;
  std::vector<SparseMatrix> generators;

  std::size_t size() const noexcept { return generators.size(); }
  std::vector<ComplexMatrix> dense() const;
};

/// Commuting theta-odd generators: N - 1 of them for even n, N/2 - 1 for odd n.
ABasis build_a_basis(unsigned n_qubits);

/// exp(sum_j coefficients[j] * generators[j]).
ComplexMatrix exp_a(const ABasis& basis, const std::vector<double>& coefficients);

/// Distance of v from the abelian group A: off-diagonal mass of E0^dag v E0
/// (even n) or of v plus the mismatch v_jj - v_{N-1-j,N-1-j} (odd n).
double a_group_defect(const ComplexMatrix& v);

inline constexpr unsigned kMaxEnumerationQubits = 8;
inline constexpr double kRankPivotThreshold = 1e-10;

struct KBasis {
  unsigned n_qubits = 0;
  std::vector<SparseMatrix> generators;     // independent over R
  std::size_t dimension = 0;                // == generators.size()
  std::vector<std::size_t> separation_counts;  // indexed by |k - j|, length N
  std::size_t candidates = 0;               // before pruning
  std::size_t zero_candidates = 0;
};

/// The three coordinate families spanning the theta-fixed subalgebra,
/// pruned to an R-linearly independent subset.
KBasis enumerate_k_basis(unsigned n_qubits);

struct DimensionReport {
  unsigned n_qubits = 0;
  std::size_t k_dimension = 0;
  std::size_t expected_k_dimension = 0;
  std::size_t a_rank = 0;
  std::size_t expected_a_rank = 0;
};

/// Checks dim k against N(N-1)/2 (even n) or (N/2)(N+1) (odd n) and |ABasis|
/// against N-1 or N/2-1. Throws StructureError on mismatch.
DimensionReport dimension_check(unsigned n_qubits);

/// Block-symplectic defect of F0^dag v F0 for odd n.
double sp_block_defect(const ComplexMatrix& v);

}  // namespace ccd
