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

#include "ccd/forms.hpp"

#include <cmath>
#include <string>

#include "ccd/errors.hpp"
#include "ccd/random.hpp"

namespace ccd {

SpinFlip::SpinFlip(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw SizeError("SpinFlip: n_qubits out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  signs_.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) signs_[j] = bit_parity_sign(j);
}

std::vector<cplx> SpinFlip::apply(std::span<const cplx> psi) const {
  if (psi.size() != dim()) throw ShapeError("SpinFlip::apply: dimension mismatch");
  const std::size_t last = dim() - 1;
  std::vector<cplx> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[last - j] = static_cast<double>(signs_[j]) * psi[j];
  return out;
}

ComplexMatrix SpinFlip::sandwich(const ComplexMatrix& x) const {
  if (x.dim() != dim()) throw ShapeError("SpinFlip::sandwich: dimension mismatch");
  const std::size_t n = dim();
  const std::size_t last = n - 1;
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double row_sign = signs_[last - r];
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = row_sign * signs_[c] * x(last - r, last - c);
    }
  }
  return out;
}

ComplexMatrix SpinFlip::dense() const {
  ComplexMatrix out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out(dim() - 1 - j, j) = static_cast<double>(signs_[j]);
  return out;
}

ComplexMatrix spin_flip_kron(unsigned n_qubits) {
  const ComplexMatrix minus_i_sigma_y{{0.0, -1.0}, {1.0, 0.0}};
  std::vector<ComplexMatrix> factors(n_qubits, minus_i_sigma_y);
  return kron(factors);
}

Ket::Ket(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  n_qubits_ = qubits_for_dim(amplitudes_.size());
  for (const cplx& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw PreconditionError("Ket: non-finite amplitude");
    }
  }
}

double Ket::norm() const noexcept {
  double sum = 0.0;
  for (const cplx& z : amplitudes_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool Ket::is_normalized(double tolerance) const noexcept {
  return std::abs(norm() - 1.0) <= tolerance;
}

Ket Ket::normalized() const {
  const double length = norm();
  if (length == 0.0) throw NormalizationError("Ket::normalized: zero vector");
  std::vector<cplx> out(amplitudes_);
  for (cplx& z : out) z /= length;
  return Ket(std::move(out));
}

Ket apply(const ComplexMatrix& m, const Ket& psi) {
  return Ket(apply(m, psi.amplitudes()));
}

Ket tensor(const Ket& a, const Ket& b) {
  std::vector<cplx> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return Ket(std::move(out));
}

cplx inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw ShapeError("inner: dimension mismatch");
  cplx sum{};
  for (std::size_t j = 0; j < a.dim(); ++j) sum += std::conj(a[j]) * b[j];
  return sum;
}

cplx concurrence_form(const Ket& phi, const Ket& psi) {
  if (phi.dim() != psi.dim()) throw ShapeError("concurrence_form: dimension mismatch");
  // phi^T (S psi) = sum_j phi[N-1-j] * sign[j] * psi[j]; no intermediate vector.
  const std::size_t last = psi.dim() - 1;
  cplx sum{};
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    const cplx term = phi[last - j] * psi[j];
    sum += bit_parity_sign(j) > 0 ? term : -term;
  }
  return sum;
}

cplx concurrence_quadratic(const Ket& psi) { return concurrence_form(psi, psi); }

double concurrence(const Ket& psi, double tolerance) {
  if (!psi.is_normalized(tolerance)) {
    throw NormalizationError("concurrence: ket norm " + std::to_string(psi.norm()) +
                             " differs from 1");
  }
  return std::abs(concurrence_quadratic(psi));
}

double tangle(const Ket& psi, double tolerance) {
  const double c = concurrence(psi, tolerance);
  return c * c;
}

StateKind parse_state_kind(std::string_view name) {
  if (name == "ghz") return StateKind::ghz;
  if (name == "w") return StateKind::w;
  if (name == "basis") return StateKind::basis;
  if (name == "random") return StateKind::random;
  throw ArgumentError("unknown state kind '" + std::string(name) + "'");
}

namespace {
std::size_t checked_dim(unsigned n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw SizeError("state: n_qubits out of range");
  return std::size_t{1} << n_qubits;
}
}  // namespace

Ket ghz_state(unsigned n_qubits) {
  std::vector<cplx> amp(checked_dim(n_qubits));
  amp.front() = amp.back() = 1.0 / std::sqrt(2.0);
  return Ket(std::move(amp));
}

Ket w_state(unsigned n_qubits) {
  std::vector<cplx> amp(checked_dim(n_qubits));
  const double weight = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (unsigned q = 0; q < n_qubits; ++q) amp[std::size_t{1} << q] = weight;
  return Ket(std::move(amp));
}

Ket basis_state(unsigned n_qubits, std::size_t index) {
  std::vector<cplx> amp(checked_dim(n_qubits));
  if (index >= amp.size()) throw ArgumentError("basis_state: index out of range");
  amp[index] = 1.0;
  return Ket(std::move(amp));
}

Ket random_ket(unsigned n_qubits, Rng& rng) {
  std::vector<cplx> amp(checked_dim(n_qubits));
  for (cplx& z : amp) z = rng.complex_normal();
  return Ket(std::move(amp)).normalized();
}

Ket make_state(StateKind kind, unsigned n_qubits, std::optional<std::uint64_t> seed,
               std::size_t index) {
  switch (kind) {
    case StateKind::ghz: return ghz_state(n_qubits);
    case StateKind::w: return w_state(n_qubits);
    case StateKind::basis: return basis_state(n_qubits, index);
    case StateKind::random: {
      if (!seed) throw ArgumentError("make_state: random kind requires a seed");
      Rng rng(*seed);
      return random_ket(n_qubits, rng);
    }
  }
  throw ArgumentError("make_state: unknown kind");
}

}  // namespace ccd
