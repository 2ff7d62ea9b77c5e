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

#include "ccd/intertwiners.hpp"

#include <cmath>
#include <string>

#include "ccd/errors.hpp"
#include "ccd/forms.hpp"

namespace ccd {

namespace {

constexpr double kDeterminantTolerance = 1e-9;

void require_special_unitary(const ComplexMatrix& m, const char* what) {
  if (unitarity_defect(m) > kDeterminantTolerance ||
      std::abs(determinant(m) - 1.0) > kDeterminantTolerance) {
    throw NumericalInconsistency(std::string(what) + ": construction is not special unitary");
  }
}

}  // namespace

Intertwiner build_standard_entangler(unsigned n_qubits) {
  if (n_qubits % 2 != 0) {
    throw EntanglerNonexistent(
        "no entangler exists for an odd number of qubits: the concurrence form is "
        "antisymmetric, so E E^T = S has no unitary solution");
  }
  if (n_qubits < 2 || n_qubits > kMaxDenseQubits) {
    throw SizeError("build_standard_entangler: n_qubits out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix e(dim);
  for (std::size_t j = 0; j < dim / 2; ++j) {
    const double eps = bit_parity_sign(j);
    e(j, 2 * j) = h;
    e(j, 2 * j + 1) = cplx{0.0, h};
    e(dim - 1 - j, 2 * j) = eps * h;
    e(dim - 1 - j, 2 * j + 1) = cplx{0.0, -eps * h};
  }
  require_special_unitary(e, "build_standard_entangler");
  const Certificate cert = certify(e, IntertwinerKind::entangler);
  if (!cert.ok || std::abs(cert.xi - 1.0) > kCertifyTolerance) {
    throw NumericalInconsistency("build_standard_entangler: E0 E0^T != S");
  }
  return {IntertwinerKind::entangler, n_qubits, std::move(e), cert.xi};
}

Intertwiner build_standard_finagler(unsigned n_qubits) {
  if (n_qubits % 2 == 0) {
    throw FinaglerArgumentError("the standard finagler is defined for odd n only");
  }
  if (n_qubits < 3) {
    throw FinaglerArgumentError(
        "the standard finagler needs n >= 3 (at n = 1 its determinant is -1)");
  }
  if (n_qubits > kMaxDenseQubits) throw SizeError("build_standard_finagler: n_qubits too large");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t half = dim / 2;
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix f(dim);
  for (std::size_t j = 0; j < half; ++j) {
    const double iota = bit_parity_sign(j);
    f(j, j) += h;
    f(dim - 1 - j, j) += h;
    f(j, half + j) += iota * h;
    f(dim - 1 - j, half + j) -= iota * h;
  }
  require_special_unitary(f, "build_standard_finagler");
  const Certificate cert = certify(f, IntertwinerKind::finagler);
  if (!cert.ok || std::abs(cert.xi - 1.0) > kCertifyTolerance) {
    throw NumericalInconsistency("build_standard_finagler: F0 Sigma^T F0^T != S");
  }
  return {IntertwinerKind::finagler, n_qubits, std::move(f), cert.xi};
}

RealMatrix symplectic_form(std::size_t dim) {
  if (dim % 2 != 0) throw ShapeError("symplectic_form: odd dimension");
  const std::size_t half = dim / 2;
  RealMatrix sigma(dim);
  for (std::size_t j = 0; j < half; ++j) {
    sigma(j, half + j) = -1.0;
    sigma(half + j, j) = 1.0;
  }
  return sigma;
}

Certificate certify(const ComplexMatrix& m, IntertwinerKind kind, double tolerance) {
  const unsigned n = qubits_for_dim(m.dim());
  const std::size_t dim = m.dim();
  ComplexMatrix product;
  if (kind == IntertwinerKind::entangler) {
    product = multiply(m, transpose(m));
  } else {
    if (dim < 2) throw ShapeError("certify: finagler needs dim >= 2");
    product = multiply(multiply(m, transpose(to_complex(symplectic_form(dim)))), transpose(m));
  }
  // Least squares over unit xi: maximize Re(conj(xi) <S, M>), i.e. xi = phase of sum S_jk M_jk.
  const SpinFlip s(n);
  cplx overlap{};
  for (std::size_t j = 0; j < dim; ++j) {
    overlap += static_cast<double>(s.signs()[j]) * product(dim - 1 - j, j);
  }
  Certificate cert;
  cert.xi = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
  ComplexMatrix target = s.dense();
  target *= cert.xi;
  cert.residual = frobenius_distance(product, target);
  const cplx xi_power = std::pow(cert.xi, static_cast<double>(dim));
  cert.ok = cert.residual <= tolerance && std::abs(xi_power - 1.0) <= tolerance;
  return cert;
}

double symplectic_defect(const ComplexMatrix& x) {
  const ComplexMatrix sigma = to_complex(symplectic_form(x.dim()));
  return frobenius_distance(multiply(multiply(transpose(x), sigma), x), sigma);
}

}  // namespace ccd
