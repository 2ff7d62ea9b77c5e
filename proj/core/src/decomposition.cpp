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

#include "ccd/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ccd/eigen.hpp"
#include "ccd/errors.hpp"
#include "ccd/intertwiners.hpp"

namespace ccd {

namespace {

// o1 diag(conj d) o1^T v, the candidate o3 for a given root choice.
ComplexMatrix realness_candidate(const RealMatrix& o1, const std::vector<cplx>& d,
                                 const ComplexMatrix& v) {
  const std::size_t dim = v.dim();
  // o1^T v first, then scale rows by conj(d), then left-multiply by o1.
  ComplexMatrix t = multiply(to_complex(transpose(o1)), v);
  for (std::size_t r = 0; r < dim; ++r) {
    const cplx s = std::conj(d[r]);
    for (std::size_t c = 0; c < dim; ++c) t(r, c) *= s;
  }
  return multiply(to_complex(o1), t);
}

double imaginary_mass(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const cplx& z : m.data()) sum += z.imag() * z.imag();
  return std::sqrt(sum);
}

// Groups indices whose d^2 values lie within tolerance of each other (single link on the circle).
std::vector<std::vector<std::size_t>> clusters(const std::vector<cplx>& d2, double tolerance) {
  std::vector<int> label(d2.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < d2.size(); ++j) {
    if (label[j] >= 0) continue;
    label[j] = static_cast<int>(out.size());
    out.push_back({j});
    for (std::size_t head = 0; head < out.back().size(); ++head) {
      const std::size_t a = out.back()[head];
      for (std::size_t b = 0; b < d2.size(); ++b) {
        if (label[b] < 0 && std::abs(d2[a] - d2[b]) <= tolerance) {
          label[b] = label[j];
          out.back().push_back(b);
        }
      }
    }
  }
  return out;
}

}  // namespace

UnitarySvd unitary_svd(const ComplexMatrix& v, const UnitarySvdOptions& options) {
  const std::size_t dim = v.dim();
  const double scale = static_cast<double>(dim);
  if (unitarity_defect(v) > options.input_tolerance * scale ||
      std::abs(determinant(v) - 1.0) > options.input_tolerance * scale) {
    throw PreconditionError("unitary_svd: input is not special unitary");
  }

  // p^2 = v v^T is symmetric and unitary; symmetrize away rounding.
  ComplexMatrix p2 = multiply(v, transpose(v));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) {
      const cplx mean = 0.5 * (p2(r, c) + p2(c, r));
      p2(r, c) = p2(c, r) = mean;
    }
  }
  SymmetricUnitaryOptions sym;
  sym.input_tolerance = options.input_tolerance * scale;
  sym.commutator_tolerance = options.input_tolerance * scale;
  const SymmetricUnitaryDiagonalization diag = diagonalize_symmetric_unitary(p2, sym);

  UnitarySvd out;
  out.o1 = diag.basis;
  const std::vector<cplx>& d2 = diag.values;

  // Principal roots; fix det d = 1 by flipping the root with the largest |angle|.
  std::vector<double> angle(dim);
  double half_sum = 0.0;
  out.d.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    angle[j] = std::arg(d2[j]);
    out.d[j] = std::polar(1.0, 0.5 * angle[j]);
    half_sum += 0.5 * angle[j];
  }
  // Sum of angles is a multiple of 2 pi, so prod d = exp(i half_sum) = +-1.
  if (std::cos(half_sum) < 0.0) {
    std::size_t pick = 0;
    for (std::size_t j = 1; j < dim; ++j) {
      if (std::abs(angle[j]) > std::abs(angle[pick])) pick = j;
    }
    out.d[pick] = -out.d[pick];
    ++out.branch_flips;
  }

  ComplexMatrix o3 = realness_candidate(out.o1, out.d, v);
  out.imaginary_mass = imaginary_mass(o3);

  if (out.imaginary_mass > options.realness_tolerance) {
    // Flip whole clusters of degenerate d^2 values; odd-size flips must pair up to keep det = 1.
    const auto groups = clusters(d2, options.cluster_tolerance);
    const std::size_t m = std::min<std::size_t>(groups.size(), 16);
    const std::size_t patterns = std::min(options.max_branch_patterns, std::size_t{1} << m);
    double best = out.imaginary_mass;
    bool repaired = false;
    for (std::size_t mask = 1; mask < patterns && !repaired; ++mask) {
      std::size_t flipped = 0;
      for (std::size_t g = 0; g < m; ++g) {
        if (mask >> g & 1U) flipped += groups[g].size();
      }
      if (flipped % 2 != 0) continue;
      std::vector<cplx> trial = out.d;
      for (std::size_t g = 0; g < m; ++g) {
        if (!(mask >> g & 1U)) continue;
        for (std::size_t j : groups[g]) trial[j] = -trial[j];
      }
      ComplexMatrix candidate = realness_candidate(out.o1, trial, v);
      const double mass = imaginary_mass(candidate);
      best = std::min(best, mass);
      if (mass <= options.realness_tolerance) {
        out.d = std::move(trial);
        o3 = std::move(candidate);
        out.imaginary_mass = mass;
        out.branch_flips += static_cast<int>(flipped);
        repaired = true;
      }
    }
    if (!repaired) {
      throw BranchSelectionError(
          "unitary_svd: no square-root branch makes p^dag v real (imaginary mass " +
              std::to_string(best) + ")",
          best);
    }
  }

  out.o2 = multiply(transpose(out.o1), real_part(o3));

  ComplexMatrix rebuilt = to_complex(out.o1);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) rebuilt(r, c) *= out.d[c];
  }
  rebuilt = multiply(rebuilt, to_complex(out.o2));
  out.residual = frobenius_distance(rebuilt, v);
  return out;
}

CcdFactors ccd(const ComplexMatrix& v, const UnitarySvdOptions& options,
               std::optional<double> residual_tolerance) {
  const unsigned n = v.n_qubits();
  if (n % 2 != 0) {
    throw UnsupportedParity("ccd: the decomposition algorithm is available for even n only (n = " +
                            std::to_string(n) + ")");
  }
  const ComplexMatrix e0 = build_standard_entangler(n).matrix;
  const ComplexMatrix e0_dag = adjoint(e0);
  const UnitarySvd svd = unitary_svd(multiply(multiply(e0_dag, v), e0), options);

  CcdFactors out;
  out.k1 = multiply(multiply(e0, to_complex(svd.o1)), e0_dag);
  out.a = multiply(multiply(e0, ComplexMatrix::diagonal(svd.d)), e0_dag);
  out.k2 = multiply(multiply(e0, to_complex(svd.o2)), e0_dag);
  out.d = svd.d;
  out.branch_flips = svd.branch_flips;
  out.residual = frobenius_distance(multiply(multiply(out.k1, out.a), out.k2), v);
  const double limit =
      residual_tolerance.value_or(kCcdResidualScale * static_cast<double>(v.dim()));
  if (!(out.residual <= limit)) {
    throw NumericalInconsistency("ccd: reconstruction residual " + std::to_string(out.residual) +
                                 " exceeds " + std::to_string(limit));
  }
  return out;
}

}  // namespace ccd
