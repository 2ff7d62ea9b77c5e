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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ccd/linalg.hpp"

namespace ccd {

class Rng;

/// Number of ones in the binary expansion of j.
inline int bit_parity_sign(std::size_t j) noexcept {
  return (std::popcount(j) & 1) ? -1 : 1;
}

/// S = (-i sigma^y)^{(x) n} stored as an index reversal with signs:
/// S|j> = (-1)^{#j} |N-1-j>.
class SpinFlip {
 public:
  explicit SpinFlip(unsigned n_qubits);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return signs_.size(); }
  std::span<const int> signs() const noexcept { return signs_; }

  /// out[N-1-j] = signs[j] * psi[j].
  std::vector<cplx> apply(std::span<const cplx> psi) const;
  /// S x S, touching each entry once.
  ComplexMatrix sandwich(const ComplexMatrix& x) const;
  /// (-1)^n.
  int square_sign() const noexcept { return (n_qubits_ & 1U) ? -1 : 1; }
  /// Dense realization, for cross-checks only.
  ComplexMatrix dense() const;

 private:
  unsigned n_qubits_;
  std::vector<int> signs_;
};

/// Dense S as the n-fold Kronecker product of (-i sigma^y); independent of SpinFlip.
ComplexMatrix spin_flip_kron(unsigned n_qubits);

class Ket {
 public:
  Ket() = default;
  explicit Ket(std::vector<cplx> amplitudes);

  unsigned n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  cplx operator[](std::size_t j) const noexcept { return amplitudes_[j]; }

  double norm() const noexcept;
  bool is_normalized(double tolerance = 1e-10) const noexcept;
  Ket normalized() const;

 private:
  unsigned n_qubits_ = 0;
  std::vector<cplx> amplitudes_;
};

Ket apply(const ComplexMatrix& m, const Ket& psi);
Ket tensor(const Ket& a, const Ket& b);
cplx inner(const Ket& a, const Ket& b);  // <a|b>

/// phi^T S psi: complex bilinear, transpose (not adjoint) on the first slot.
cplx concurrence_form(const Ket& phi, const Ket& psi);
/// Q(psi) = psi^T S psi.
cplx concurrence_quadratic(const Ket& psi);

inline constexpr double kNormalizationTolerance = 1e-8;

/// |psi^T S psi|; throws NormalizationError unless |psi| = 1 within tolerance.
double concurrence(const Ket& psi, double tolerance = kNormalizationTolerance);
double tangle(const Ket& psi, double tolerance = kNormalizationTolerance);

enum class StateKind { ghz, w, basis, random };

StateKind parse_state_kind(std::string_view name);

Ket ghz_state(unsigned n_qubits);
Ket w_state(unsigned n_qubits);
Ket basis_state(unsigned n_qubits, std::size_t index);
Ket random_ket(unsigned n_qubits, Rng& rng);

/// index is used by basis; seed by random.
Ket make_state(StateKind kind, unsigned n_qubits, std::optional<std::uint64_t> seed = {},
               std::size_t index = 0);

}  // namespace ccd
