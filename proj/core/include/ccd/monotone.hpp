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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccd/forms.hpp"
#include "ccd/linalg.hpp"

namespace ccd {

class Rng;

inline constexpr double kDensityTolerance = 1e-10;

/// Hermitian, unit-trace, positive semidefinite N x N matrix.
class DensityMatrix {
 public:
  /// Validates the invariants; throws PreconditionError.
  explicit DensityMatrix(ComplexMatrix entries, double tolerance = kDensityTolerance);

  static DensityMatrix pure(const Ket& psi);
  static DensityMatrix maximally_mixed(unsigned n_qubits);
  /// p a + (1 - p) b.
  static DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b);

  unsigned n_qubits() const noexcept { return entries_.n_qubits(); }
  std::size_t dim() const noexcept { return entries_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return entries_; }

 private:
  ComplexMatrix entries_;
};

/// Random density matrix of the given rank: sum of rank projectors onto random
/// kets with Dirichlet-like random weights.
DensityMatrix random_density(unsigned n_qubits, std::size_t rank, Rng& rng);

/// max{0, l_0 - l_1 - ... - l_{N-1}} with l_j the square roots of the
/// eigenvalues of rho rho~, rho~ = S conj(rho) S^{-1}. Even n only.
double mixed_concurrence(const DensityMatrix& rho);

struct TransportResult {
  ComplexMatrix k;         // in K
  double theta = 0.0;      // phi ~ e^{i theta} k psi
  double residual = 0.0;   // ||k psi - e^{i theta} phi||
  bool degenerate = false; // imaginary parts vanished after dephasing
};

inline constexpr double kTransportQTolerance = 1e-8;

/// k in K carrying psi onto phi up to a global phase, for kets with equal
/// concurrence quadratic Q (even n).
TransportResult orbit_transport(const Ket& psi, const Ket& phi);

/// Permutation exchanging qubit slots j and k (1-based, qubit 1 most significant).
ComplexMatrix swap_operator(unsigned j, unsigned k, unsigned n_qubits);

/// Applies a 2 x 2 operator on one qubit slot (0-based, 0 = most significant).
Ket apply_single_qubit(const ComplexMatrix& op, unsigned qubit, const Ket& psi);

struct PovmPair {
  double q = 1.0;
  double r = 1.0;
  ComplexMatrix u0;
  ComplexMatrix u1;
  ComplexMatrix v;
  unsigned acting_qubit = 0;  // 0-based

  ComplexMatrix a0() const;
  ComplexMatrix a1() const;
  /// ||A0^dag A0 + A1^dag A1 - I||_F.
  double completeness_defect() const;
};

PovmPair random_povm(unsigned n_qubits, Rng& rng);

inline constexpr double kZeroBranchProbability = 1e-12;

struct PovmOutcome {
  double c_before = 0.0;
  double avg_after = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double predicted = 0.0;  // (qr + sqrt((1-q^2)(1-r^2))) c_before
  bool zero_branch = false;
};

PovmOutcome povm_trial(const Ket& psi, const PovmPair& povm);

struct ConvexityResult {
  double mixed = 0.0;     // C(p rho1 + (1-p) rho2)
  double combined = 0.0;  // p C(rho1) + (1-p) C(rho2)
  bool holds = false;     // mixed <= combined + 1e-8
};

ConvexityResult convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2, double p);

struct MonotoneConfig {
  unsigned n_qubits = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double monotone_tolerance = 1e-9;
  double closed_form_tolerance = 1e-8;
  double convexity_tolerance = 1e-8;
  double purity_tolerance = 1e-8;
};

struct MonotoneViolation {
  std::string check;
  std::uint64_t trial = 0;
  double excess = 0.0;
};

struct MonotoneReport {
  MonotoneConfig config;
  std::uint64_t povm_trials = 0;
  std::uint64_t povm_violations = 0;
  double max_closed_form_error = 0.0;
  double max_equal_qr_error = 0.0;
  std::uint64_t convexity_trials = 0;
  std::uint64_t convexity_violations = 0;
  std::uint64_t purity_trials = 0;
  double max_purity_error = 0.0;
  std::vector<MonotoneViolation> violations;  // first few witnesses
  bool passed() const noexcept { return violations.empty(); }
};

/// POVM monotonicity, convexity and pure-state consistency sweeps over seeded trials.
MonotoneReport monotone_sweep(const MonotoneConfig& config);

}  // namespace ccd
