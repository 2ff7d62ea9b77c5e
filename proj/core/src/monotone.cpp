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

#include "ccd/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccd/cartan.hpp"
#include "ccd/eigen.hpp"
#include "ccd/errors.hpp"
#include "ccd/intertwiners.hpp"
#include "ccd/random.hpp"

namespace ccd {

DensityMatrix::DensityMatrix(ComplexMatrix entries, double tolerance)
    : entries_(std::move(entries)) {
  if (entries_.dim() == 0) throw PreconditionError("DensityMatrix: empty matrix");
  if (frobenius_distance(entries_, adjoint(entries_)) > tolerance) {
    throw PreconditionError("DensityMatrix: not Hermitian");
  }
  if (std::abs(trace(entries_) - 1.0) > tolerance) {
    throw PreconditionError("DensityMatrix: trace differs from 1");
  }
  const HermitianEigen eig = hermitian_eigh(entries_);
  if (eig.values.front() < -tolerance) {
    throw PreconditionError("DensityMatrix: negative eigenvalue " +
                            std::to_string(eig.values.front()));
  }
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  if (!psi.is_normalized(kNormalizationTolerance)) {
    throw NormalizationError("DensityMatrix::pure: ket is not normalized");
  }
  const Ket unit = psi.normalized();
  ComplexMatrix m(unit.dim());
  for (std::size_t r = 0; r < unit.dim(); ++r) {
    for (std::size_t c = 0; c < unit.dim(); ++c) m(r, c) = unit[r] * std::conj(unit[c]);
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(unsigned n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("DensityMatrix::mix: p outside [0, 1]");
  ComplexMatrix m = scaled(a.matrix(), p);
  m += scaled(b.matrix(), 1.0 - p);
  return DensityMatrix(std::move(m));
}

DensityMatrix random_density(unsigned n_qubits, std::size_t rank, Rng& rng) {
  if (rank < 1) throw ArgumentError("random_density: rank must be >= 1");
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<double> weights(rank);
  double total = 0.0;
  for (double& w : weights) {
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    total += (w = -std::log(u));
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < rank; ++i) {
    const Ket psi = random_ket(n_qubits, rng);
    const double w = weights[i] / total;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) += w * psi[r] * std::conj(psi[c]);
    }
  }
  return DensityMatrix(std::move(m));
}

double mixed_concurrence(const DensityMatrix& rho) {
  const unsigned n = rho.n_qubits();
  if (n % 2 != 0) throw UnsupportedParity("mixed_concurrence: n must be even");
  const std::size_t dim = rho.dim();
  const HermitianEigen eig = hermitian_eigh(rho.matrix());

  // rho = W W^dag with W = U sqrt(p) restricted to the numerical support. The
  // nonzero eigenvalues of rho rho~ are those of T T^dag with T = W^T S W
  // (T is symmetric for even n), so the l_j are the singular values of T.
  // Working with the factor avoids the sqrt of eigenvalue dust that a
  // sqrt(rho) rho~ sqrt(rho) route would amplify.
  const double p_max = std::max(eig.values.back(), 0.0);
  const double cutoff = 1e-12 * std::max(1.0, p_max);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dim; ++j) {
    if (eig.values[j] > cutoff) support.push_back(j);
  }
  const std::size_t rank = support.size();
  if (rank == 0) return 0.0;
  std::vector<cplx> w(dim * rank);
  for (std::size_t col = 0; col < rank; ++col) {
    const double scale = std::sqrt(eig.values[support[col]]);
    for (std::size_t r = 0; r < dim; ++r) w[r * rank + col] = scale * eig.basis(r, support[col]);
  }
  std::vector<cplx> t(rank * rank);
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = 0; b < rank; ++b) {
      cplx sum{};
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx term = w[(dim - 1 - j) * rank + a] * w[j * rank + b];
        sum += bit_parity_sign(j) > 0 ? term : -term;
      }
      t[a * rank + b] = sum;
    }
  }
  const std::vector<double> lambda = singular_values(t, rank, rank);
  double value = lambda.front();
  for (std::size_t j = 1; j < lambda.size(); ++j) value -= lambda[j];
  return std::max(0.0, value);
}

namespace {

using RealVector = std::vector<double>;

double dot(const RealVector& a, const RealVector& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

double length(const RealVector& a) { return std::sqrt(dot(a, a)); }

void scale(RealVector& a, double s) {
  for (double& x : a) x *= s;
}

void axpy(RealVector& y, double alpha, const RealVector& x) {
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += alpha * x[j];
}

// In-place left multiplication by the reflection I - 2 u u^T (u unit).
void reflect_rows(RealMatrix& m, const RealVector& u) {
  const std::size_t dim = m.dim();
  for (std::size_t c = 0; c < dim; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < dim; ++r) s += u[r] * m(r, c);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) -= 2.0 * s * u[r];
  }
}

void reflect_vector(RealVector& x, const RealVector& u) { axpy(x, -2.0 * dot(u, x), u); }

// Appends to o the reflection carrying unit a onto unit b; returns whether one was applied.
bool reflect_onto(RealMatrix& o, RealVector& a, const RealVector& b) {
  RealVector u = a;
  axpy(u, -1.0, b);
  const double norm = length(u);
  if (norm <= 1e-15) return false;
  scale(u, 1.0 / norm);
  reflect_rows(o, u);
  reflect_vector(a, u);
  return true;
}

struct SplitKet {
  RealVector re;
  RealVector im;
};

// Real/imaginary parts of E0^dag (phase * psi).
SplitKet split_coordinates(const ComplexMatrix& e0_dag, const Ket& psi, cplx phase) {
  const std::vector<cplx> x = apply(e0_dag, psi.amplitudes());
  SplitKet out{RealVector(x.size()), RealVector(x.size())};
  for (std::size_t j = 0; j < x.size(); ++j) {
    const cplx z = phase * x[j];
    out.re[j] = z.real();
    out.im[j] = z.imag();
  }
  return out;
}

}  // namespace

TransportResult orbit_transport(const Ket& psi, const Ket& phi) {
  if (psi.dim() != phi.dim()) throw ShapeError("orbit_transport: dimension mismatch");
  const unsigned n = psi.n_qubits();
  if (n % 2 != 0) throw UnsupportedParity("orbit_transport: n must be even");
  if (!psi.is_normalized(kNormalizationTolerance) || !phi.is_normalized(kNormalizationTolerance)) {
    throw NormalizationError("orbit_transport: kets must be normalized");
  }
  const cplx q_psi = concurrence_quadratic(psi);
  const cplx q_phi = concurrence_quadratic(phi);
  if (std::abs(q_psi - q_phi) > kTransportQTolerance) {
    throw PreconditionError("orbit_transport: concurrence quadratics differ by " +
                            std::to_string(std::abs(q_psi - q_phi)));
  }
  const std::size_t dim = psi.dim();
  // Dephase so that Q = t >= 0; in E0 coordinates Q(E0 x) = x^T x.
  const cplx alpha = 0.5 * (q_psi + q_phi);
  const double phase_angle = std::abs(alpha) > 0.0 ? std::arg(alpha) : 0.0;
  const cplx dephase = std::polar(1.0, -0.5 * phase_angle);

  const ComplexMatrix e0 = build_standard_entangler(n).matrix;
  const ComplexMatrix e0_dag = adjoint(e0);
  SplitKet v = split_coordinates(e0_dag, psi, dephase);
  SplitKet w = split_coordinates(e0_dag, phi, dephase);

  // Normalize v1, w1 and orthogonalize the imaginary parts against them.
  const double v1 = length(v.re);
  const double w1 = length(w.re);
  scale(v.re, 1.0 / v1);
  scale(w.re, 1.0 / w1);
  axpy(v.im, -dot(v.re, v.im), v.re);
  axpy(w.im, -dot(w.re, w.im), w.re);
  const double v2 = length(v.im);
  const double w2 = length(w.im);

  constexpr double kDegenerate = 1e-10;
  TransportResult result;
  result.degenerate = v2 <= kDegenerate || w2 <= kDegenerate;
  if (result.degenerate && std::max(v2, w2) > 1e-7) {
    throw DegeneracyError("orbit_transport: imaginary part vanishes for one ket only (" +
                          std::to_string(v2) + " vs " + std::to_string(w2) + ")");
  }

  RealMatrix o = RealMatrix::identity(dim);
  int reflections = 0;
  RealVector moving = v.re;
  reflections += reflect_onto(o, moving, w.re) ? 1 : 0;
  if (!result.degenerate) {
    scale(v.im, 1.0 / v2);
    scale(w.im, 1.0 / w2);
    // Apply the first reflection to v2, then reflect within the complement of w1.
    RealVector moved(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) moved[r] += o(r, c) * v.im[c];
    }
    axpy(moved, -dot(moved, w.re), w.re);
    scale(moved, 1.0 / length(moved));
    reflections += reflect_onto(o, moved, w.im) ? 1 : 0;
  }
  if (reflections % 2 != 0) {
    // Restore det = +1 with a reflection fixing the mapped vectors.
    RealVector best;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < dim; ++i) {
      RealVector e(dim, 0.0);
      e[i] = 1.0;
      axpy(e, -dot(e, w.re), w.re);
      if (!result.degenerate) axpy(e, -dot(e, w.im), w.im);
      const double norm = length(e);
      if (norm > best_norm) {
        best_norm = norm;
        best = std::move(e);
      }
    }
    scale(best, 1.0 / best_norm);
    reflect_rows(o, best);
  }

  result.k = multiply(multiply(e0, to_complex(o)), e0_dag);
  const Ket moved_psi = apply(result.k, psi);
  result.theta = std::arg(inner(phi, moved_psi));
  const cplx rotate = std::polar(1.0, result.theta);
  double residual = 0.0;
  for (std::size_t j = 0; j < dim; ++j) residual += std::norm(moved_psi[j] - rotate * phi[j]);
  result.residual = std::sqrt(residual);
  return result;
}

ComplexMatrix swap_operator(unsigned j, unsigned k, unsigned n_qubits) {
  if (!(1 <= j && j < k && k <= n_qubits)) {
    throw ArgumentError("swap_operator: need 1 <= j < k <= n");
  }
  if (n_qubits > kMaxDenseQubits) throw SizeError("swap_operator: n_qubits too large");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const unsigned bj = n_qubits - j;
  const unsigned bk = n_qubits - k;
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t x = ((i >> bj) ^ (i >> bk)) & 1U;
    const std::size_t swapped = i ^ ((x << bj) | (x << bk));
    out(swapped, i) = 1.0;
  }
  return out;
}

Ket apply_single_qubit(const ComplexMatrix& op, unsigned qubit, const Ket& psi) {
  if (op.dim() != 2) throw ShapeError("apply_single_qubit: operator must be 2 x 2");
  if (qubit >= psi.n_qubits()) throw ArgumentError("apply_single_qubit: qubit out of range");
  const std::size_t bit = std::size_t{1} << (psi.n_qubits() - 1 - qubit);
  std::vector<cplx> out(psi.amplitudes().begin(), psi.amplitudes().end());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (i & bit) continue;
    const cplx x0 = psi[i];
    const cplx x1 = psi[i | bit];
    out[i] = op(0, 0) * x0 + op(0, 1) * x1;
    out[i | bit] = op(1, 0) * x0 + op(1, 1) * x1;
  }
  return Ket(std::move(out));
}

ComplexMatrix PovmPair::a0() const {
  const ComplexMatrix d{{q, 0.0}, {0.0, r}};
  return multiply(multiply(u0, d), v);
}

ComplexMatrix PovmPair::a1() const {
  const ComplexMatrix d{{std::sqrt(std::max(0.0, 1.0 - q * q)), 0.0},
                        {0.0, std::sqrt(std::max(0.0, 1.0 - r * r))}};
  return multiply(multiply(u1, d), v);
}

double PovmPair::completeness_defect() const {
  const ComplexMatrix a = a0();
  const ComplexMatrix b = a1();
  ComplexMatrix sum = multiply(adjoint(a), a);
  sum += multiply(adjoint(b), b);
  return frobenius_distance(sum, ComplexMatrix::identity(2));
}

PovmPair random_povm(unsigned n_qubits, Rng& rng) {
  PovmPair povm;
  povm.q = rng.uniform();
  povm.r = rng.uniform();
  povm.u0 = random_su2(rng);
  povm.u1 = random_su2(rng);
  povm.v = random_su2(rng);
  povm.acting_qubit = static_cast<unsigned>(rng.next() % n_qubits);
  return povm;
}

PovmOutcome povm_trial(const Ket& psi, const PovmPair& povm) {
  if (!(povm.q >= 0.0 && povm.q <= 1.0 && povm.r >= 0.0 && povm.r <= 1.0)) {
    throw ArgumentError("povm_trial: q and r must lie in [0, 1]");
  }
  if (povm.completeness_defect() > 1e-10) {
    throw PreconditionError("povm_trial: A0^dag A0 + A1^dag A1 != I");
  }
  PovmOutcome out;
  out.c_before = concurrence(psi);
  const Ket branch0 = apply_single_qubit(povm.a0(), povm.acting_qubit, psi);
  const Ket branch1 = apply_single_qubit(povm.a1(), povm.acting_qubit, psi);
  out.p0 = std::pow(branch0.norm(), 2);
  out.p1 = std::pow(branch1.norm(), 2);
  // p_i C(A_i psi / sqrt(p_i)) = |Q(A_i psi)|.
  for (const auto& [p, branch] : {std::pair{out.p0, &branch0}, std::pair{out.p1, &branch1}}) {
    if (p < kZeroBranchProbability) {
      out.zero_branch = true;
      continue;
    }
    out.avg_after += std::abs(concurrence_quadratic(*branch));
  }
  const double factor =
      povm.q * povm.r + std::sqrt(std::max(0.0, (1.0 - povm.q * povm.q) * (1.0 - povm.r * povm.r)));
  out.predicted = factor * out.c_before;
  return out;
}

ConvexityResult convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2, double p) {
  ConvexityResult out;
  out.mixed = mixed_concurrence(DensityMatrix::mix(p, rho1, rho2));
  out.combined = p * mixed_concurrence(rho1) + (1.0 - p) * mixed_concurrence(rho2);
  out.holds = out.mixed <= out.combined + 1e-8;
  return out;
}

MonotoneReport monotone_sweep(const MonotoneConfig& config) {
  if (config.n_qubits < 2 || config.n_qubits % 2 != 0) {
    throw UnsupportedParity("monotone_sweep: n must be even and >= 2");
  }
  if (config.trials < 1) throw ArgumentError("monotone_sweep: trials must be >= 1");
  constexpr std::size_t kMaxWitnesses = 8;
  MonotoneReport report;
  report.config = config;
  auto record = [&](const char* check, std::uint64_t trial, double excess) {
    if (report.violations.size() < kMaxWitnesses) report.violations.push_back({check, trial, excess});
  };
  const unsigned n = config.n_qubits;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    Rng rng = Rng::substream(config.seed, t);
    const Ket psi = random_ket(n, rng);
    PovmPair povm = random_povm(n, rng);

    const PovmOutcome outcome = povm_trial(psi, povm);
    ++report.povm_trials;
    if (outcome.avg_after > outcome.c_before + config.monotone_tolerance) {
      ++report.povm_violations;
      record("povm_monotone", t, outcome.avg_after - outcome.c_before);
    }
    const double closed = std::abs(outcome.avg_after - outcome.predicted);
    report.max_closed_form_error = std::max(report.max_closed_form_error, closed);
    if (closed > config.closed_form_tolerance) record("povm_closed_form", t, closed);

    povm.r = povm.q;
    const PovmOutcome equal = povm_trial(psi, povm);
    const double equal_error = std::abs(equal.avg_after - equal.c_before);
    report.max_equal_qr_error = std::max(report.max_equal_qr_error, equal_error);
    if (equal_error > config.closed_form_tolerance) record("povm_equal_qr", t, equal_error);

    const DensityMatrix rho1 = random_density(n, 2, rng);
    const DensityMatrix rho2 = random_density(n, 2, rng);
    const double p = rng.uniform();
    const ConvexityResult convex = convexity_check(rho1, rho2, p);
    ++report.convexity_trials;
    if (convex.mixed > convex.combined + config.convexity_tolerance) {
      ++report.convexity_violations;
      record("convexity", t, convex.mixed - convex.combined);
    }

    if (report.purity_trials < 100) {
      ++report.purity_trials;
      const double diff =
          std::abs(mixed_concurrence(DensityMatrix::pure(psi)) - concurrence(psi));
      report.max_purity_error = std::max(report.max_purity_error, diff);
      if (diff > config.purity_tolerance) record("pure_state_consistency", t, diff);
    }
  }
  return report;
}

}  // namespace ccd
