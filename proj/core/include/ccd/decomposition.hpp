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
#include <optional>
#include <vector>

#include "ccd/linalg.hpp"

namespace ccd {

struct UnitarySvdOptions {
  /// Accepted unitarity / determinant defect of the input.
  double input_tolerance = 1e-8;
  /// Accepted ||Im(p^dag v)||_F before (and after) branch repair.
  double realness_tolerance = 1e-8;
  /// d^2 values closer than this share a cluster during branch repair.
  double cluster_tolerance = 1e-8;
  /// Upper bound on sign patterns tried during branch repair.
  std::size_t max_branch_patterns = std::size_t{1} << 16;
};

/// v = o1 diag(d) o2 with o1, o2 in SO(N) and prod d = 1.
struct UnitarySvd {
  RealMatrix o1;
  std::vector<cplx> d;
  RealMatrix o2;
  double residual = 0.0;        // ||o1 diag(d) o2 - v||_F
  double imaginary_mass = 0.0;  // ||Im(p^dag v)||_F of the accepted branch
  int branch_flips = 0;
};

UnitarySvd unitary_svd(const ComplexMatrix& v, const UnitarySvdOptions& options = {});

/// v = k1 a k2 with k1, k2 in K and a = E0 diag(d) E0^dag in A (even n).
struct CcdFactors {
  ComplexMatrix k1;
  ComplexMatrix a;
  ComplexMatrix k2;
  std::vector<cplx> d;
  double residual = 0.0;
  int branch_flips = 0;
};

/// Reconstruction tolerance per unit of N.
inline constexpr double kCcdResidualScale = 1e-8;

/// Throws NumericalInconsistency when the reconstruction residual exceeds
/// residual_tolerance (default kCcdResidualScale * N).
CcdFactors ccd(const ComplexMatrix& v, const UnitarySvdOptions& options = {},
               std::optional<double> residual_tolerance = std::nullopt);

}  // namespace ccd
