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

#include <cstdint>
#include <random>

#include "ccd/linalg.hpp"

namespace ccd {

/// Seeded generator with platform-independent uniform and normal draws
/// (std::mt19937_64 is fully specified; the distributions below are explicit).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream keyed by (seed, index); order- and thread-independent.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Standard normal via Box-Muller.
  double normal();
  cplx complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Haar-distributed element of SU(2^n): Gram-Schmidt on a complex Ginibre
/// matrix (positive R diagonal), then division by an N-th root of det.
ComplexMatrix random_special_unitary(unsigned n_qubits, std::uint64_t seed);
ComplexMatrix random_special_unitary(unsigned n_qubits, Rng& rng);

/// Haar-distributed element of SO(dim).
RealMatrix random_special_orthogonal(std::size_t dim, Rng& rng);

/// Haar-distributed SU(2) factor.
ComplexMatrix random_su2(Rng& rng);

/// v_1 (x) ... (x) v_n with independent Haar SU(2) factors.
ComplexMatrix random_local_unitary(unsigned n_qubits, Rng& rng);

}  // namespace ccd
