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

#include "ccd/cartan.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "ccd/eigen.hpp"
#include "ccd/errors.hpp"
#include "ccd/forms.hpp"
#include "ccd/intertwiners.hpp"

namespace ccd {

void SparseMatrix::add(std::size_t row, std::size_t col, cplx value) {
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (it->row == row && it->col == col) {
      it->value += value;
      if (it->value == cplx{}) entries.erase(it);
      return;
    }
  }
  if (value != cplx{}) entries.push_back({row, col, value});
}

ComplexMatrix SparseMatrix::to_dense() const {
  ComplexMatrix out(dim);
  for (const auto& e : entries) out(e.row, e.col) += e.value;
  return out;
}

namespace {

void require_su_algebra(const ComplexMatrix& x, double tolerance) {
  const double scale = 1.0 + frobenius_norm(x);
  const ComplexMatrix sum = [&] {
    ComplexMatrix s = adjoint(x);
    s += x;
    return s;
  }();
  if (frobenius_norm(sum) > tolerance * scale) {
    throw PreconditionError("theta: input is not anti-Hermitian");
  }
  if (std::abs(trace(x)) > tolerance * scale) {
    throw PreconditionError("theta: input is not traceless");
  }
}

}  // namespace

ComplexMatrix theta(const ComplexMatrix& x, double tolerance) {
  require_su_algebra(x, tolerance);
  const SpinFlip s(x.n_qubits());
  ComplexMatrix out = s.sandwich(conjugate(x));
  if (s.square_sign() < 0) out *= -1.0;
  return out;
}

CartanSplit split(const ComplexMatrix& x, double tolerance) {
  const ComplexMatrix t = theta(x, tolerance);
  CartanSplit parts{x, x};
  parts.k_part += t;
  parts.k_part *= 0.5;
  parts.p_part -= t;
  parts.p_part *= 0.5;
  return parts;
}

double k_membership_residual(const ComplexMatrix& v) {
  const SpinFlip s(v.n_qubits());
  const std::size_t dim = v.dim();
  // (S v)[r][c] = sign[N-1-r] * v[N-1-r][c]
  ComplexMatrix sv(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const double sign = s.signs()[dim - 1 - r];
    for (std::size_t c = 0; c < dim; ++c) sv(r, c) = sign * v(dim - 1 - r, c);
  }
  ComplexMatrix form = multiply(transpose(v), sv);
  form -= s.dense();
  return frobenius_norm(form);
}

bool is_in_K(const ComplexMatrix& v, double tolerance) {
  const double unitarity_tolerance = std::max(tolerance, 1e-8) * static_cast<double>(v.dim());
  if (unitarity_defect(v) > unitarity_tolerance) {
    throw PreconditionError("is_in_K: input is not unitary");
  }
  return k_membership_residual(v) <= tolerance;
}

std::vector<ComplexMatrix> ABasis::dense() const {
  std::vector<ComplexMatrix> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.to_dense());
  return out;
}

ABasis build_a_basis(unsigned n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxDenseQubits) {
    throw SizeError("build_a_basis: n_qubits out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const cplx i{0.0, 1.0};
  ABasis basis{n_qubits, {}};
  for (std::size_t j = 0; j + 2 <= dim / 2; ++j) {
    SparseMatrix h{dim, {}};
    h.add(j, j, i);
    h.add(dim - j - 1, dim - j - 1, i);
    h.add(j + 1, j + 1, -i);
    h.add(dim - j - 2, dim - j - 2, -i);
    basis.generators.push_back(std::move(h));
  }
  if (n_qubits % 2 == 0) {
    for (std::size_t j = 0; j < dim / 2; ++j) {
      SparseMatrix h{dim, {}};
      h.add(j, dim - j - 1, i);
      h.add(dim - j - 1, j, i);
      basis.generators.push_back(std::move(h));
    }
  }
  return basis;
}

ComplexMatrix exp_a(const ABasis& basis, const std::vector<double>& coefficients) {
  if (coefficients.size() != basis.size()) {
    throw ArgumentError("exp_a: coefficient count differs from basis size");
  }
  const std::size_t dim = std::size_t{1} << basis.n_qubits;
  ComplexMatrix x(dim);
  for (std::size_t g = 0; g < basis.size(); ++g) {
    for (const auto& e : basis.generators[g].entries) x(e.row, e.col) += coefficients[g] * e.value;
  }
  return exp_anti_hermitian(x);
}

double a_group_defect(const ComplexMatrix& v) {
  const unsigned n = v.n_qubits();
  const std::size_t dim = v.dim();
  double mass = 0.0;
  if (n % 2 == 0) {
    const ComplexMatrix e0 = build_standard_entangler(n).matrix;
    const ComplexMatrix inner = multiply(multiply(adjoint(e0), v), e0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (r != c) mass += std::norm(inner(r, c));
      }
    }
  } else {
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (r != c) mass += std::norm(v(r, c));
      }
      mass += 0.5 * std::norm(v(r, r) - v(dim - 1 - r, dim - 1 - r));
    }
  }
  return std::sqrt(mass);
}

namespace {

using PairKey = std::pair<std::size_t, std::size_t>;

// Generators built from (j, k) are supported on {(j,k), (k,j)} and the mirrored
// positions {(N-1-k, N-1-j), (N-1-j, N-1-k)}, so candidates sharing this
// unordered orbit are the only ones that can be dependent.
PairKey orbit_key(std::size_t j, std::size_t k, std::size_t dim) {
  const PairKey direct{std::min(j, k), std::max(j, k)};
  const PairKey mirror{dim - 1 - direct.second, dim - 1 - direct.first};
  return std::min(direct, mirror);
}

// Incremental Gram-Schmidt on real coordinates; returns indices of kept vectors.
std::vector<std::size_t> independent_subset(const std::vector<SparseMatrix>& candidates) {
  std::map<PairKey, std::size_t> slot;
  for (const auto& m : candidates) {
    for (const auto& e : m.entries) slot.try_emplace({e.row, e.col}, slot.size());
  }
  const std::size_t length = 2 * slot.size();
  std::vector<std::vector<double>> accepted;
  std::vector<std::size_t> kept;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    std::vector<double> x(length, 0.0);
    for (const auto& e : candidates[idx].entries) {
      const std::size_t s = slot.at({e.row, e.col});
      x[2 * s] = e.value.real();
      x[2 * s + 1] = e.value.imag();
    }
    double original = 0.0;
    for (double t : x) original += t * t;
    original = std::sqrt(original);
    if (original <= kRankPivotThreshold) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : accepted) {
        double dot = 0.0;
        for (std::size_t t = 0; t < length; ++t) dot += q[t] * x[t];
        for (std::size_t t = 0; t < length; ++t) x[t] -= dot * q[t];
      }
    }
    double rest = 0.0;
    for (double t : x) rest += t * t;
    rest = std::sqrt(rest);
    if (rest <= kRankPivotThreshold * original) continue;
    for (double& t : x) t /= rest;
    accepted.push_back(std::move(x));
    kept.push_back(idx);
  }
  return kept;
}

}  // namespace

KBasis enumerate_k_basis(unsigned n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxEnumerationQubits) {
    throw SizeError("enumerate_k_basis: n_qubits must be in [2, " +
                    std::to_string(kMaxEnumerationQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const cplx i{0.0, 1.0};
  KBasis out;
  out.n_qubits = n_qubits;
  out.separation_counts.assign(dim, 0);

  std::map<PairKey, std::vector<SparseMatrix>> orbits;
  auto offer = [&](PairKey key, SparseMatrix m) {
    ++out.candidates;
    if (m.entries.empty()) {
      ++out.zero_candidates;
      return;
    }
    orbits[key].push_back(std::move(m));
  };

  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double s = bit_parity_sign(j) * bit_parity_sign(k);
      const std::size_t mj = dim - j - 1;
      const std::size_t mk = dim - k - 1;
      SparseMatrix f1{dim, {}};
      f1.add(k, j, 1.0);
      f1.add(j, k, -1.0);
      f1.add(mk, mj, s);
      f1.add(mj, mk, -s);
      offer(orbit_key(j, k, dim), std::move(f1));

      SparseMatrix f2{dim, {}};
      f2.add(k, j, i);
      f2.add(j, k, i);
      f2.add(mj, mk, -s * i);
      f2.add(mk, mj, -s * i);
      offer(orbit_key(j, k, dim), std::move(f2));
    }
    SparseMatrix f3{dim, {}};
    f3.add(j, j, i);
    f3.add(dim - j - 1, dim - j - 1, -i);
    offer(orbit_key(j, j, dim), std::move(f3));
  }

  for (auto& [key, members] : orbits) {
    const std::size_t separation = key.second - key.first;
    for (std::size_t idx : independent_subset(members)) {
      out.generators.push_back(std::move(members[idx]));
      ++out.separation_counts[separation];
    }
  }
  out.dimension = out.generators.size();
  return out;
}

DimensionReport dimension_check(unsigned n_qubits) {
  const KBasis k = enumerate_k_basis(n_qubits);
  const ABasis a = build_a_basis(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  DimensionReport report;
  report.n_qubits = n_qubits;
  report.k_dimension = k.dimension;
  report.a_rank = a.size();
  if (n_qubits % 2 == 0) {
    report.expected_k_dimension = dim * (dim - 1) / 2;
    report.expected_a_rank = dim - 1;
  } else {
    report.expected_k_dimension = (dim / 2) * (dim + 1);
    report.expected_a_rank = dim / 2 - 1;
  }
  if (report.k_dimension != report.expected_k_dimension ||
      report.a_rank != report.expected_a_rank) {
    throw StructureError("dimension_check(n=" + std::to_string(n_qubits) + "): dim k = " +
                         std::to_string(report.k_dimension) + " (expected " +
                         std::to_string(report.expected_k_dimension) + "), rank a = " +
                         std::to_string(report.a_rank) + " (expected " +
                         std::to_string(report.expected_a_rank) + ")");
  }
  return report;
}

double sp_block_defect(const ComplexMatrix& v) {
  const ComplexMatrix f0 = build_standard_finagler(v.n_qubits()).matrix;
  return symplectic_defect(multiply(multiply(adjoint(f0), v), f0));
}

}  // namespace ccd
