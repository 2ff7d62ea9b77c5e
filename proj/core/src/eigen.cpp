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

#include "ccd/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "ccd/errors.hpp"

namespace ccd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_mass(const RealMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = r + 1; c < a.dim(); ++c) sum += 2.0 * a(r, c) * a(r, c);
  }
  return std::sqrt(sum);
}

double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = r + 1; c < a.dim(); ++c) sum += 2.0 * std::norm(a(r, c));
  }
  return std::sqrt(sum);
}

// tan of the Jacobi angle that annihilates the (p, q) entry of the 2x2
// symmetric block [[app, apq], [apq, aqq]].
double jacobi_tangent(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  if (std::isinf(theta * theta)) return 0.5 / theta;
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta < 0.0 ? -t : t;
}

template <typename Matrix>
std::vector<std::size_t> ascending_order(const Matrix& a) {
  std::vector<std::size_t> order(a.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::real(a(x, x)) < std::real(a(y, y));
  });
  return order;
}

}  // namespace

EigenPair jacobi_eigh(const RealSymmetricMatrix& m, const JacobiOptions& options) {
  const std::size_t n = m.dim();
  RealMatrix a = m.to_dense();
  RealMatrix v = RealMatrix::identity(n);
  const double norm = m.frobenius_norm();
  for (const double x : a.data()) {
    if (!std::isfinite(x)) throw PreconditionError("jacobi_eigh: non-finite entry");
  }

  EigenPair out;
  double off = off_diagonal_mass(a);
  int sweep = 0;
  while (off > 4.0 * kEps * norm && sweep < options.max_sweeps) {
    ++sweep;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-3 * kEps * norm / static_cast<double>(n)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const double t = jacobi_tangent(a(p, p), a(q, q), apq);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        double* rp = &a(p, 0);
        double* rq = &a(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = rp[k];
          const double aqk = rq[k];
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_mass(a);
    if (!rotated) break;
  }
  if (off > options.tolerance * norm) {
    throw ConvergenceError("jacobi_eigh: no convergence after " + std::to_string(sweep) +
                               " sweeps",
                           off);
  }

  const auto order = ascending_order(a);
  out.values.resize(n);
  out.basis = RealMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.basis(r, j) = v(r, order[j]);
  }
  if (n > 0 && determinant(out.basis) < 0.0) {
    for (std::size_t r = 0; r < n; ++r) out.basis(r, n - 1) = -out.basis(r, n - 1);
  }
  out.off_diagonal = off;
  out.sweeps = sweep;
  return out;
}

HermitianEigen hermitian_eigh(const ComplexMatrix& h, const JacobiOptions& options) {
  const std::size_t n = h.dim();
  const double norm = frobenius_norm(h);
  if (frobenius_distance(h, adjoint(h)) > 1e-10 * (1.0 + norm)) {
    throw PreconditionError("hermitian_eigh: input is not Hermitian");
  }
  ComplexMatrix a = h;
  for (std::size_t j = 0; j < n; ++j) a(j, j) = a(j, j).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  double off = off_diagonal_mass(a);
  int sweep = 0;
  while (off > 4.0 * kEps * norm && sweep < options.max_sweeps) {
    ++sweep;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-3 * kEps * norm / static_cast<double>(n)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        // Rephase column/row q so the pivot becomes real positive.
        const cplx phase = std::conj(a(p, q)) / r;
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= phase;
          v(k, q) *= phase;
        }
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= std::conj(phase);
        const double t = jacobi_tangent(a(p, p).real(), a(q, q).real(), r);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        cplx* rp = &a(p, 0);
        cplx* rq = &a(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = rp[k];
          const cplx aqk = rq[k];
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_mass(a);
    if (!rotated) break;
  }
  if (off > options.tolerance * norm) {
    throw ConvergenceError("hermitian_eigh: no convergence", off);
  }

  const auto order = ascending_order(a);
  HermitianEigen out;
  out.values.resize(n);
  out.basis = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.basis(r, j) = v(r, order[j]);
  }
  out.off_diagonal = off;
  return out;
}

std::vector<double> singular_values(std::span<const cplx> entries, std::size_t rows,
                                    std::size_t cols) {
  if (entries.size() != rows * cols) throw ShapeError("singular_values: entry count mismatch");
  std::vector<std::vector<cplx>> col(cols, std::vector<cplx>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) col[c][r] = entries[r * cols + c];
  }
  auto dot = [rows](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx acc{};
    for (std::size_t k = 0; k < rows; ++k) acc += std::conj(x[k]) * y[k];
    return acc;
  };
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = std::real(dot(col[p], col[p]));
        const double beta = std::real(dot(col[q], col[q]));
        const cplx gamma = dot(col[p], col[q]);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx phase = std::conj(gamma) / g;
        for (auto& z : col[q]) z *= phase;
        const double t = jacobi_tangent(alpha, beta, g);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < rows; ++k) {
          const cplx xp = col[p][k];
          const cplx xq = col[q][k];
          col[p][k] = c * xp - s * xq;
          col[q][k] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (std::size_t c = 0; c < cols; ++c) sv[c] = std::sqrt(std::real(dot(col[c], col[c])));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

ComplexMatrix exp_anti_hermitian(const ComplexMatrix& x) {
  if (frobenius_distance(x, scaled(adjoint(x), -1.0)) > 1e-10 * (1.0 + frobenius_norm(x))) {
    throw PreconditionError("exp_anti_hermitian: input is not anti-Hermitian");
  }
  ComplexMatrix h = scaled(x, cplx{0.0, -1.0});
  // Remove rounding asymmetry before the Hermitian solve.
  ComplexMatrix hh = adjoint(h);
  hh += h;
  hh *= 0.5;
  const HermitianEigen eig = hermitian_eigh(hh);
  const std::size_t n = x.dim();
  ComplexMatrix scaled_basis = eig.basis;
  for (std::size_t c = 0; c < n; ++c) {
    const cplx phase = std::polar(1.0, eig.values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled_basis(r, c) *= phase;
  }
  return multiply(scaled_basis, adjoint(eig.basis));
}

namespace {

// out = m * basis restricted to the listed columns (N x k, row-major).
std::vector<double> multiply_columns(const RealMatrix& m, const RealMatrix& basis,
                                     std::span<const std::size_t> columns) {
  const std::size_t n = m.dim();
  const std::size_t k = columns.size();
  std::vector<double> out(n * k, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const double mrs = m(r, s);
      if (mrs == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) out[r * k + j] += mrs * basis(s, columns[j]);
    }
  }
  return out;
}

}  // namespace

SymmetricUnitaryDiagonalization diagonalize_symmetric_unitary(
    const ComplexMatrix& p, const SymmetricUnitaryOptions& options) {
  const std::size_t n = p.dim();
  if (frobenius_distance(p, transpose(p)) > options.input_tolerance) {
    throw PreconditionError("diagonalize_symmetric_unitary: input is not symmetric");
  }
  if (unitarity_defect(p) > options.input_tolerance) {
    throw PreconditionError("diagonalize_symmetric_unitary: input is not unitary");
  }

  const RealMatrix re = real_part(p);
  const RealMatrix im = imag_part(p);
  SymmetricUnitaryDiagonalization out;
  {
    const RealMatrix ab = multiply(re, im);
    const RealMatrix ba = multiply(im, re);
    out.commutator = frobenius_distance(ab, ba);
  }
  if (out.commutator > options.commutator_tolerance) {
    throw NumericalInconsistency("diagonalize_symmetric_unitary: real and imaginary parts "
                                 "do not commute (||ab-ba|| = " +
                                 std::to_string(out.commutator) + ")");
  }

  const RealSymmetricMatrix b = RealSymmetricMatrix::from_dense(im);
  const EigenPair eig_b = jacobi_eigh(b);
  const double threshold = options.cluster_scale * (1.0 + b.frobenius_norm());

  RealMatrix basis = eig_b.basis;
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && eig_b.values[stop] - eig_b.values[stop - 1] <= threshold) ++stop;
    const std::size_t size = stop - start;
    if (size > 1) {
      std::vector<std::size_t> cols(size);
      std::iota(cols.begin(), cols.end(), start);
      const std::vector<double> a_v = multiply_columns(re, eig_b.basis, cols);
      RealMatrix restricted(size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          double acc = 0.0;
          for (std::size_t r = 0; r < n; ++r) acc += eig_b.basis(r, cols[i]) * a_v[r * size + j];
          restricted(i, j) = acc;
        }
      }
      const EigenPair eig_a = jacobi_eigh(RealSymmetricMatrix::from_dense(restricted));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < size; ++j) {
          double acc = 0.0;
          for (std::size_t i = 0; i < size; ++i) acc += eig_b.basis(r, cols[i]) * eig_a.basis(i, j);
          basis(r, cols[j]) = acc;
        }
      }
    }
    start = stop;
  }
  if (determinant(basis) < 0.0) {
    for (std::size_t r = 0; r < n; ++r) basis(r, n - 1) = -basis(r, n - 1);
  }

  // values_j = (basis^T p basis)_jj, renormalized onto the unit circle.
  out.values.assign(n, cplx{});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const cplx prs = p(r, s);
      if (prs == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out.values[j] += basis(r, j) * prs * basis(s, j);
    }
  }
  for (auto& z : out.values) {
    const double mag = std::abs(z);
    z = mag > 0.0 ? z / mag : cplx{1.0, 0.0};
  }

  ComplexMatrix recon(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx w = basis(r, j) * out.values[j];
      if (w == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) recon(r, c) += w * basis(c, j);
    }
  }
  out.residual = frobenius_distance(recon, p);
  out.basis = std::move(basis);
  return out;
}

}  // namespace ccd
