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
#include <span>
#include <vector>

#include "ccd/linalg.hpp"

namespace ccd {

struct JacobiOptions {
  /// Off-diagonal Frobenius mass accepted relative to ||m||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigen-decomposition of a real symmetric matrix: m = basis diag(values) basis^T.
struct EigenPair {
  std::vector<double> values;  // ascending
  RealMatrix basis;            // columns are eigenvectors, det = +1
  double off_diagonal = 0.0;   // achieved off-diagonal Frobenius mass
  int sweeps = 0;
};

/// Cyclic Jacobi. Throws ConvergenceError if the off-diagonal mass stays
/// above tolerance * ||m||_F after max_sweeps.
EigenPair jacobi_eigh(const RealSymmetricMatrix& m, const JacobiOptions& options = {});

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix basis;         // unitary, columns are eigenvectors
  double off_diagonal = 0.0;
};

/// Complex Jacobi for Hermitian matrices. Throws PreconditionError if h is
/// not Hermitian within 1e-10 * (1 + ||h||_F).
HermitianEigen hermitian_eigh(const ComplexMatrix& h, const JacobiOptions& options = {});

/// Singular values (descending) of a rows x cols row-major complex matrix by
/// one-sided Jacobi. Small singular values keep absolute accuracy of order
/// eps * sigma_max.
std::vector<double> singular_values(std::span<const cplx> entries, std::size_t rows,
                                    std::size_t cols);

/// exp(x) for anti-Hermitian x, via the Hermitian eigenproblem of -i x.
ComplexMatrix exp_anti_hermitian(const ComplexMatrix& x);

struct SymmetricUnitaryOptions {
  /// Symmetry and unitarity tolerance on the input (Frobenius).
  double input_tolerance = 1e-9;
  /// Accepted ||ab - ba||_F for p = a + ib.
  double commutator_tolerance = 1e-8;
  /// Eigenvalues of b within cluster_scale * (1 + ||b||_F) share a cluster.
  double cluster_scale = 1e-8;
};

/// p = basis diag(values) basis^T with basis real special orthogonal.
struct SymmetricUnitaryDiagonalization {
  RealMatrix basis;
  std::vector<cplx> values;  // unit modulus
  double residual = 0.0;     // ||basis diag(values) basis^T - p||_F
  double commutator = 0.0;   // ||ab - ba||_F
};

/// Diagonalizes a complex symmetric unitary p by splitting p = a + ib, which
/// commute, diagonalizing b and then a restricted to each eigenvalue cluster of b.
SymmetricUnitaryDiagonalization diagonalize_symmetric_unitary(
    const ComplexMatrix& p, const SymmetricUnitaryOptions& options = {});

}  // namespace ccd
