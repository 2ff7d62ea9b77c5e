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

#include "ccd/linalg.hpp"

namespace ccd {

enum class IntertwinerKind { entangler, finagler };

struct Certificate {
  bool ok = false;
  cplx xi{0.0, 0.0};     // best unit scalar with M ~ xi S
  double residual = 0.0;  // ||M - xi S||_F
};

struct Intertwiner {
  IntertwinerKind kind;
  unsigned n_qubits;
  ComplexMatrix matrix;
  cplx phase_xi;
};

inline constexpr double kCertifyTolerance = 1e-8;

/// E0 for even n: phased GHZ columns, E0 E0^T = S.
Intertwiner build_standard_entangler(unsigned n_qubits);
/// F0 for odd n >= 3: real, F0 Sigma^T F0^T = S with Sigma = (-i sigma^y) (x) 1.
Intertwiner build_standard_finagler(unsigned n_qubits);

/// Sigma = (-i sigma^y) (x) 1_{N/2} = [[0, -1], [1, 0]] in N/2 blocks.
RealMatrix symplectic_form(std::size_t dim);

/// Tests m m^T = xi S (entangler) or m Sigma^T m^T = xi S (finagler).
Certificate certify(const ComplexMatrix& m, IntertwinerKind kind,
                    double tolerance = kCertifyTolerance);

/// ||x^T Sigma x - Sigma||_F.
double symplectic_defect(const ComplexMatrix& x);

}  // namespace ccd
