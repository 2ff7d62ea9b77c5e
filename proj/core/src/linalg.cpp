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

#include "ccd/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "ccd/errors.hpp"

namespace ccd {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ShapeError(std::string(op) + ": dimension mismatch " + std::to_string(a) +
                     " vs " + std::to_string(b));
  }
}

}  // namespace

unsigned qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(dim));
}

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), n_qubits_(qubits_for_dim(dim)), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), n_qubits_(qubits_for_dim(dim)), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) {
    throw ShapeError("expected " + std::to_string(dim * dim) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  if (!all_finite()) throw PreconditionError("matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    require_same_dim(row.size(), dim_, "ComplexMatrix");
    std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) m(j, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
  ComplexMatrix m(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m(j, j) = values[j];
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "operator+=");
  for (std::size_t j = 0; j < entries_.size(); ++j) entries_[j] += other.entries_[j];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "operator-=");
  for (std::size_t j = 0; j < entries_.size(); ++j) entries_[j] -= other.entries_[j];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) noexcept {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

RealMatrix RealMatrix::identity(std::size_t dim) {
  RealMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) m(j, j) = 1.0;
  return m;
}

RealSymmetricMatrix RealSymmetricMatrix::from_dense(const RealMatrix& m) {
  RealSymmetricMatrix s(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c <= r; ++c) s.set(r, c, 0.5 * (m(r, c) + m(c, r)));
  }
  return s;
}

RealMatrix RealSymmetricMatrix::to_dense() const {
  RealMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = (*this)(r, c);
  }
  return m;
}

double RealSymmetricMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < r; ++c) sum += 2.0 * (*this)(r, c) * (*this)(r, c);
    sum += (*this)(r, r) * (*this)(r, r);
  }
  return std::sqrt(sum);
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "multiply");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = &out(i, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const cplx* brow = &b(k, 0);
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.data()) z = std::conj(z);
  return out;
}

ComplexMatrix scaled(const ComplexMatrix& a, cplx scalar) {
  ComplexMatrix out = a;
  out *= scalar;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = multiply(a, b);
  out -= multiply(b, a);
  return out;
}

cplx trace(const ComplexMatrix& a) {
  cplx t{};
  for (std::size_t j = 0; j < a.dim(); ++j) t += a(j, j);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "frobenius_distance");
  double sum = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t j = 0; j < da.size(); ++j) sum += std::norm(da[j] - db[j]);
  return std::sqrt(sum);
}

namespace {

template <typename T>
T lu_determinant(std::vector<T> m, std::size_t n) {
  T det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(m[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(m[r * n + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return T{0.0};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[pivot * n + c]);
      det = -det;
    }
    const T diag = m[col * n + col];
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = m[r * n + col] / diag;
      if (factor == T{0.0}) continue;
      for (std::size_t c = col + 1; c < n; ++c) m[r * n + c] -= factor * m[col * n + c];
    }
  }
  return det;
}

}  // namespace

cplx determinant(const ComplexMatrix& a) {
  return lu_determinant(std::vector<cplx>(a.data().begin(), a.data().end()), a.dim());
}

double determinant(const RealMatrix& a) {
  return lu_determinant(std::vector<double>(a.data().begin(), a.data().end()), a.dim());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t ca = 0; ca < na; ++ca) {
      const cplx s = a(ra, ca);
      if (s == cplx{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb) {
        for (std::size_t cb = 0; cb < nb; ++cb) {
          out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw ShapeError("kron: no factors");
  ComplexMatrix out = factors[0];
  for (std::size_t j = 1; j < factors.size(); ++j) out = kron(out, factors[j]);
  if (out.n_qubits() > kMaxDenseQubits) throw SizeError("kron: result exceeds dense size cap");
  return out;
}

std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v) {
  require_same_dim(m.dim(), v.size(), "apply");
  std::vector<cplx> out(v.size());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    cplx acc{};
    const cplx* row = &m(r, 0);
    for (std::size_t c = 0; c < m.dim(); ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.dim());
  auto src = m.data();
  auto dst = out.data();
  for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j];
  return out;
}

RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix out(m.dim());
  auto src = m.data();
  auto dst = out.data();
  for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j].real();
  return out;
}

RealMatrix imag_part(const ComplexMatrix& m) {
  RealMatrix out(m.dim());
  auto src = m.data();
  auto dst = out.data();
  for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j].imag();
  return out;
}

double max_imag(const ComplexMatrix& m) noexcept {
  double best = 0.0;
  for (const auto& z : m.data()) best = std::max(best, std::abs(z.imag()));
  return best;
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "multiply");
  const std::size_t n = a.dim();
  RealMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = &out(i, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.data().data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
  return out;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

double frobenius_distance(const RealMatrix& a, const RealMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "frobenius_distance");
  double sum = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t j = 0; j < da.size(); ++j) sum += (da[j] - db[j]) * (da[j] - db[j]);
  return std::sqrt(sum);
}

double unitarity_defect(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double sum = 0.0;
  // (a^dagger a)_{jk} = sum_r conj(a_rj) a_rk
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      cplx acc{};
      for (std::size_t r = 0; r < n; ++r) acc += std::conj(a(r, j)) * a(r, k);
      if (j == k) acc -= 1.0;
      sum += (j == k ? 1.0 : 2.0) * std::norm(acc);
    }
  }
  return std::sqrt(sum);
}

double orthogonality_defect(const RealMatrix& a) {
  const std::size_t n = a.dim();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) acc += a(r, j) * a(r, k);
      if (j == k) acc -= 1.0;
      sum += (j == k ? 1.0 : 2.0) * acc * acc;
    }
  }
  return std::sqrt(sum);
}

}  // namespace ccd
