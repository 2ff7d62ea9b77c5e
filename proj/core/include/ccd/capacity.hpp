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
#include <span>
#include <string_view>
#include <vector>

#include "ccd/linalg.hpp"

namespace ccd {

struct ConcurrenceSpectrum {
  unsigned n_qubits = 0;
  std::vector<cplx> points;  // unit modulus
};

/// Eigenvalues of M M^T with M = E0^dag v E0 (even n).
ConcurrenceSpectrum concurrence_spectrum(const ComplexMatrix& v);

enum class HullVerdict { inside, boundary, outside };

std::string_view to_string(HullVerdict verdict) noexcept;

inline constexpr double kAngularTolerance = 1e-9;

/// Largest cyclic gap (radians) between consecutive arguments of the points.
double max_angular_gap(std::span<const cplx> points);

/// 0 lies in the convex hull of unit points iff no gap exceeds pi.
HullVerdict hull_contains_zero(std::span<const cplx> points,
                               double tolerance = kAngularTolerance);
inline HullVerdict hull_contains_zero(const ConcurrenceSpectrum& spectrum,
                                      double tolerance = kAngularTolerance) {
  return hull_contains_zero(spectrum.points, tolerance);
}

struct EnclosingCircle {
  cplx center;
  double radius = 0.0;
  std::vector<std::size_t> support;  // indices of points on the circle
  std::vector<double> weights;       // center = sum weights[i] * points[support[i]]
};

/// Smallest circle containing all points (Welzl, deterministic order).
EnclosingCircle minimum_enclosing_circle(std::span<const cplx> points);

struct KappaResult {
  double kappa = 0.0;
  std::vector<cplx> witness;  // weights w with sum |w| = 1, sum w = 0
  HullVerdict verdict = HullVerdict::outside;
};

/// max |sum w_j z_j| subject to sum |w_j| = 1 and sum w_j = 0. The maximum
/// equals the minimum enclosing circle radius of the points (LP duality);
/// inside verdicts return exactly 1.
KappaResult kappa_value(std::span<const cplx> points);
inline KappaResult kappa_value(const ConcurrenceSpectrum& spectrum) {
  return kappa_value(spectrum.points);
}

/// max_{j,k} |z_j - z_k| / 2, attained by a two-point witness.
double kappa_pairwise_lower(std::span<const cplx> points);

/// |sum w_j z_j|, and the constraint defects of a witness.
struct WitnessCheck {
  double objective = 0.0;
  double l1_defect = 0.0;   // |sum |w_j| - 1|
  double sum_defect = 0.0;  // |sum w_j|
};
WitnessCheck check_witness(std::span<const cplx> points, std::span<const cplx> witness);

struct CapacityReport {
  ConcurrenceSpectrum spectrum;
  HullVerdict zero_in_hull = HullVerdict::outside;
  double kappa = 0.0;
  double kappa_pairwise_lower = 0.0;
  std::vector<cplx> argmax_witness;
};

CapacityReport capacity_report(const ComplexMatrix& v);

/// Points from A coordinates: d_0^2 = e^{2it_0}, d_j^2 = e^{2i(t_j - t_{j-1})},
/// d_{N-1}^2 = e^{-2it_{N-2}}.
std::vector<cplx> chain_points(std::span<const double> t);

inline constexpr unsigned kMaxSpectrumQubits = 20;

/// Haar-random element of A in spectrum coordinates, from substream (seed, trial).
ConcurrenceSpectrum haar_sample_a_spectrum(unsigned n_qubits, std::uint64_t seed,
                                           std::uint64_t trial_index);

/// Hull verdict of haar_sample_a_spectrum(n, seed, trial) without trigonometry.
/// With early_exit, stops drawing once the points already surround 0.
HullVerdict sample_a_verdict(unsigned n_qubits, std::uint64_t seed, std::uint64_t trial_index,
                             bool early_exit = true, double tolerance = kAngularTolerance);

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// 95% Wilson score interval.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct ProbabilityEstimate {
  unsigned n_qubits = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  WilsonInterval interval;
  double stderr_hat = 0.0;  // sqrt(p(1-p)/trials)
};

/// Fraction of Haar samples of A whose spectrum hull contains 0 (boundary
/// counts as inside). Result is independent of thread count.
ProbabilityEstimate capacity_probability(unsigned n_qubits, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads = 0);

struct WendelEstimate {
  unsigned m = 0;
  std::uint64_t trials = 0;
  double p_fail_hat = 0.0;
  double stderr_hat = 0.0;
  double closed_form = 0.0;
};

/// m 2^{1-m}: probability that m uniform circle points lie in a half circle.
double wendel_closed_form(unsigned m);

WendelEstimate wendel_oracle(unsigned m, std::uint64_t trials, std::uint64_t seed);

/// Multiset equality of unit points up to angular tolerance.
bool spectra_match(std::span<const cplx> a, std::span<const cplx> b, double tolerance);

}  // namespace ccd
