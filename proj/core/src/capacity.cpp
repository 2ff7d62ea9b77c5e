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

#include "ccd/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "ccd/eigen.hpp"
#include "ccd/errors.hpp"
#include "ccd/intertwiners.hpp"
#include "ccd/random.hpp"

namespace ccd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_of(cplx z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

// Fraction of a turn in [0, 1) for x in (-4, 4); integer truncation avoids a
// libm floor call on the hot path.
inline double wrap_turn(double x) {
  const double shifted = x + 4.0;
  const double f = shifted - static_cast<double>(static_cast<std::int64_t>(shifted));
  return f >= 1.0 ? 0.0 : f;
}

// Largest cyclic gap of sorted values on a circle of the given period.
double sorted_max_gap(const std::vector<double>& sorted, double period) {
  double gap = sorted.front() + period - sorted.back();
  for (std::size_t j = 1; j < sorted.size(); ++j) gap = std::max(gap, sorted[j] - sorted[j - 1]);
  return gap;
}

// Max cyclic gap of values in [0, 1) in one pass and constant memory: keep
// min/max per bucket and compare across nonempty buckets. Gaps inside a bucket
// are at most 1/kBuckets, so the result is exact whenever it exceeds that.
class GapAccumulator {
 public:
  static constexpr std::size_t kBuckets = 1024;

  GapAccumulator() {
    lo_.fill(2.0);
    hi_.fill(-1.0);
  }

  void add(double x) {
    std::size_t b = static_cast<std::size_t>(x * static_cast<double>(kBuckets));
    if (b >= kBuckets) b = kBuckets - 1;
    lo_[b] = std::min(lo_[b], x);
    hi_[b] = std::max(hi_[b], x);
  }

  double max_gap() const {
    double first = -1.0;
    double previous = -1.0;
    double gap = 0.0;
    for (std::size_t b = 0; b < kBuckets; ++b) {
      if (hi_[b] < 0.0) continue;
      if (first < 0.0) {
        first = lo_[b];
      } else {
        gap = std::max(gap, lo_[b] - previous);
      }
      previous = hi_[b];
    }
    return std::max(gap, first + 1.0 - previous);
  }

 private:
  std::array<double, kBuckets> lo_;
  std::array<double, kBuckets> hi_;
};

HullVerdict verdict_from_gap(double gap, double half, double tolerance) {
  if (gap > half + tolerance) return HullVerdict::outside;
  if (gap < half - tolerance) return HullVerdict::inside;
  return HullVerdict::boundary;
}

std::size_t dim_for_spectrum(unsigned n_qubits) {
  if (n_qubits % 2 != 0) {
    throw UnsupportedParity("concurrence capacity is defined for even n only");
  }
  if (n_qubits < 2 || n_qubits > kMaxSpectrumQubits) {
    throw SizeError("spectrum sampling: n_qubits must be in [2, " +
                    std::to_string(kMaxSpectrumQubits) + "]");
  }
  return std::size_t{1} << n_qubits;
}

// Arguments (in turns) of the chained points of one Haar sample of A.
template <typename Sink>
void draw_chain_turns(std::size_t dim, Rng& rng, Sink&& sink) {
  double previous = 0.0;
  for (std::size_t j = 0; j + 1 < dim; ++j) {
    const double u = rng.uniform();
    if (!sink(wrap_turn(2.0 * u - 2.0 * previous))) return;
    previous = u;
  }
  sink(wrap_turn(-2.0 * previous));
}

}  // namespace

ConcurrenceSpectrum concurrence_spectrum(const ComplexMatrix& v) {
  const unsigned n = v.n_qubits();
  if (n % 2 != 0) throw UnsupportedParity("concurrence_spectrum: n must be even");
  const std::size_t dim = v.dim();
  if (unitarity_defect(v) > 1e-8 * static_cast<double>(dim)) {
    throw PreconditionError("concurrence_spectrum: input is not unitary");
  }
  const ComplexMatrix e0 = build_standard_entangler(n).matrix;
  const ComplexMatrix m = multiply(multiply(adjoint(e0), v), e0);
  ComplexMatrix p = multiply(m, transpose(m));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) {
      const cplx mean = 0.5 * (p(r, c) + p(c, r));
      p(r, c) = p(c, r) = mean;
    }
  }
  SymmetricUnitaryOptions options;
  options.input_tolerance = 1e-8 * static_cast<double>(dim);
  options.commutator_tolerance = 1e-8 * static_cast<double>(dim);
  return {n, diagonalize_symmetric_unitary(p, options).values};
}

std::string_view to_string(HullVerdict verdict) noexcept {
  switch (verdict) {
    case HullVerdict::inside: return "inside";
    case HullVerdict::boundary: return "boundary";
    case HullVerdict::outside: return "outside";
  }
  return "unknown";
}

double max_angular_gap(std::span<const cplx> points) {
  if (points.empty()) throw ArgumentError("max_angular_gap: empty spectrum");
  std::vector<double> angles;
  angles.reserve(points.size());
  for (const cplx& z : points) angles.push_back(angle_of(z));
  std::sort(angles.begin(), angles.end());
  return sorted_max_gap(angles, kTwoPi);
}

HullVerdict hull_contains_zero(std::span<const cplx> points, double tolerance) {
  return verdict_from_gap(max_angular_gap(points), std::numbers::pi, tolerance);
}

namespace {

struct Circle {
  cplx center;
  double radius;
};

bool covers(const Circle& c, cplx z) {
  return std::abs(z - c.center) <= c.radius + 1e-12 * (1.0 + c.radius);
}

Circle circle_two(cplx a, cplx b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

// Circumcircle, or the widest two-point circle if the points are (nearly) collinear.
Circle circle_three(cplx a, cplx b, cplx c) {
  const cplx ab = b - a;
  const cplx ac = c - a;
  const double det = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  if (std::abs(det) <= 1e-14) {
    Circle best = circle_two(a, b);
    for (const Circle& cand : {circle_two(a, c), circle_two(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = std::norm(ab);
  const double ac2 = std::norm(ac);
  const cplx offset{(ac.imag() * ab2 - ab.imag() * ac2) / det,
                    (ab.real() * ac2 - ac.real() * ab2) / det};
  return {a + offset, std::abs(offset)};
}

// Barycentric weights of target in the triangle (a, b, c), clamped to the simplex.
std::vector<double> barycentric(cplx target, cplx a, cplx b, cplx c) {
  const cplx v0 = b - a;
  const cplx v1 = c - a;
  const cplx v2 = target - a;
  const double det = v0.real() * v1.imag() - v0.imag() * v1.real();
  std::vector<double> t(3, 1.0 / 3.0);
  if (std::abs(det) > 1e-300) {
    t[1] = (v2.real() * v1.imag() - v2.imag() * v1.real()) / det;
    t[2] = (v0.real() * v2.imag() - v0.imag() * v2.real()) / det;
    t[0] = 1.0 - t[1] - t[2];
  }
  double sum = 0.0;
  for (double& x : t) sum += (x = std::max(x, 0.0));
  for (double& x : t) x /= sum;
  return t;
}

}  // namespace

EnclosingCircle minimum_enclosing_circle(std::span<const cplx> points) {
  if (points.empty()) throw ArgumentError("minimum_enclosing_circle: no points");
  const std::size_t count = points.size();
  // Fixed-seed shuffle: expected linear time, reproducible output.
  std::vector<std::size_t> order(count);
  for (std::size_t j = 0; j < count; ++j) order[j] = j;
  Rng rng(0x5eed5eedULL);
  for (std::size_t j = count; j > 1; --j) {
    const std::size_t pick = static_cast<std::size_t>(rng.next() % j);
    std::swap(order[j - 1], order[pick]);
  }

  Circle circle{points[order[0]], 0.0};
  std::vector<std::size_t> defining{order[0]};
  for (std::size_t i = 1; i < count; ++i) {
    const cplx p = points[order[i]];
    if (covers(circle, p)) continue;
    circle = {p, 0.0};
    defining = {order[i]};
    for (std::size_t j = 0; j < i; ++j) {
      const cplx q = points[order[j]];
      if (covers(circle, q)) continue;
      circle = circle_two(p, q);
      defining = {order[i], order[j]};
      for (std::size_t k = 0; k < j; ++k) {
        const cplx r = points[order[k]];
        if (covers(circle, r)) continue;
        circle = circle_three(p, q, r);
        defining = {order[i], order[j], order[k]};
      }
    }
  }

  EnclosingCircle out{circle.center, circle.radius, defining, {}};
  if (defining.size() == 1) {
    out.weights = {1.0};
  } else if (defining.size() == 2) {
    out.weights = {0.5, 0.5};
  } else {
    out.weights = barycentric(circle.center, points[defining[0]], points[defining[1]],
                              points[defining[2]]);
  }
  return out;
}

double kappa_pairwise_lower(std::span<const cplx> points) {
  if (points.size() < 2) return 0.0;
  std::vector<double> angles;
  angles.reserve(points.size());
  for (const cplx& z : points) angles.push_back(angle_of(z));
  std::sort(angles.begin(), angles.end());
  // Chord length is monotone in the angular distance, so pair each point with
  // the neighbours of its antipode.
  double best = 0.0;
  const std::size_t count = angles.size();
  for (std::size_t j = 0; j < count; ++j) {
    double target = angles[j] + std::numbers::pi;
    if (target >= kTwoPi) target -= kTwoPi;
    const auto it = std::lower_bound(angles.begin(), angles.end(), target);
    const std::size_t hi = static_cast<std::size_t>(it - angles.begin()) % count;
    const std::size_t lo = (hi + count - 1) % count;
    for (std::size_t k : {lo, hi}) {
      double sep = std::abs(angles[k] - angles[j]);
      sep = std::min(sep, kTwoPi - sep);
      best = std::max(best, std::sin(0.5 * sep));
    }
  }
  return best;
}

WitnessCheck check_witness(std::span<const cplx> points, std::span<const cplx> witness) {
  if (points.size() != witness.size()) throw ShapeError("check_witness: size mismatch");
  WitnessCheck check;
  cplx objective{};
  cplx sum{};
  double l1 = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    objective += witness[j] * points[j];
    sum += witness[j];
    l1 += std::abs(witness[j]);
  }
  check.objective = std::abs(objective);
  check.l1_defect = std::abs(l1 - 1.0);
  check.sum_defect = std::abs(sum);
  return check;
}

KappaResult kappa_value(std::span<const cplx> points) {
  if (points.size() < 2) throw ArgumentError("kappa_value: need at least two points");
  for (const cplx& z : points) {
    if (std::abs(std::abs(z) - 1.0) > 1e-8) {
      throw PreconditionError("kappa_value: spectrum point off the unit circle");
    }
  }
  KappaResult result;
  result.verdict = hull_contains_zero(points);
  result.witness.assign(points.size(), cplx{});

  const EnclosingCircle mec = minimum_enclosing_circle(points);
  if (mec.radius <= 1e-15) {
    // All points coincide: every feasible w gives 0.
    result.kappa = 0.0;
    result.witness[0] = 0.5;
    result.witness[1] = -0.5;
    return result;
  }
  // Re-centre on the exact convex combination so the witness is feasible.
  cplx center{};
  for (std::size_t s = 0; s < mec.support.size(); ++s) {
    center += mec.weights[s] * points[mec.support[s]];
  }
  for (std::size_t s = 0; s < mec.support.size(); ++s) {
    const std::size_t j = mec.support[s];
    if (result.verdict == HullVerdict::inside) {
      result.witness[j] += mec.weights[s] * std::conj(points[j]);
    } else {
      const cplx arm = points[j] - center;
      result.witness[j] += mec.weights[s] * std::conj(arm) / std::abs(arm);
    }
  }
  const WitnessCheck check = check_witness(points, result.witness);
  if (check.l1_defect > 1e-8 || check.sum_defect > 1e-8) {
    throw OptimizationError("kappa_value: witness violates constraints (|sum w| = " +
                            std::to_string(check.sum_defect) + ")");
  }
  result.kappa = result.verdict == HullVerdict::inside ? 1.0 : std::min(mec.radius, 1.0);
  return result;
}

CapacityReport capacity_report(const ComplexMatrix& v) {
  CapacityReport report;
  report.spectrum = concurrence_spectrum(v);
  report.zero_in_hull = hull_contains_zero(report.spectrum);
  const KappaResult kappa = kappa_value(report.spectrum);
  report.kappa = kappa.kappa;
  report.argmax_witness = kappa.witness;
  report.kappa_pairwise_lower = kappa_pairwise_lower(report.spectrum.points);
  return report;
}

std::vector<cplx> chain_points(std::span<const double> t) {
  std::vector<cplx> points;
  points.reserve(t.size() + 1);
  double previous = 0.0;
  for (double tj : t) {
    points.push_back(std::polar(1.0, 2.0 * tj - 2.0 * previous));
    previous = tj;
  }
  points.push_back(std::polar(1.0, -2.0 * previous));
  return points;
}

ConcurrenceSpectrum haar_sample_a_spectrum(unsigned n_qubits, std::uint64_t seed,
                                           std::uint64_t trial_index) {
  const std::size_t dim = dim_for_spectrum(n_qubits);
  Rng rng = Rng::substream(seed, trial_index);
  ConcurrenceSpectrum out{n_qubits, {}};
  out.points.reserve(dim);
  draw_chain_turns(dim, rng, [&](double turn) {
    out.points.push_back(std::polar(1.0, kTwoPi * turn));
    return true;
  });
  return out;
}

HullVerdict sample_a_verdict(unsigned n_qubits, std::uint64_t seed, std::uint64_t trial_index,
                             bool early_exit, double tolerance) {
  const std::size_t dim = dim_for_spectrum(n_qubits);
  const double half_tolerance = tolerance / kTwoPi;

  // Pass 1: occupancy of 1024 arcs. An empty cyclic run of r arcs brackets the
  // largest gap in [r, r + 2] / 1024, which settles almost every sample. With
  // early_exit, stop once all 64 coarse arcs are hit (gap <= 2/64 turn; more
  // points only shrink gaps).
  constexpr std::size_t kArcs = 1024;
  std::array<std::uint64_t, kArcs / 64> occupied{};
  std::uint64_t coarse = 0;
  bool surrounded = false;
  {
    Rng rng = Rng::substream(seed, trial_index);
    draw_chain_turns(dim, rng, [&](double turn) {
      const auto arc = static_cast<std::size_t>(turn * static_cast<double>(kArcs));
      occupied[arc >> 6] |= std::uint64_t{1} << (arc & 63U);
      if (early_exit) {
        coarse |= std::uint64_t{1} << (arc >> 4);
        if (coarse == ~std::uint64_t{0}) {
          surrounded = true;
          return false;
        }
      }
      return true;
    });
  }
  if (surrounded) return HullVerdict::inside;

  std::size_t longest = 0;
  std::size_t run = 0;
  std::size_t leading = 0;
  bool seen = false;
  for (std::size_t arc = 0; arc < kArcs; ++arc) {
    if (occupied[arc >> 6] >> (arc & 63U) & 1U) {
      if (!seen) leading = run;
      seen = true;
      longest = std::max(longest, run);
      run = 0;
    } else {
      ++run;
    }
  }
  longest = std::max(longest, run + leading);  // wrap-around run
  const double arcs = static_cast<double>(kArcs);
  if ((static_cast<double>(longest) + 2.0) / arcs < 0.5 - half_tolerance) {
    return HullVerdict::inside;
  }
  if (static_cast<double>(longest) / arcs > 0.5 + half_tolerance) return HullVerdict::outside;

  // Pass 2: replay the same substream and measure the gap exactly.
  Rng rng = Rng::substream(seed, trial_index);
  GapAccumulator gaps;
  draw_chain_turns(dim, rng, [&](double turn) {
    gaps.add(turn);
    return true;
  });
  return verdict_from_gap(gaps.max_gap(), 0.5, half_tolerance);
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

template <typename Trial>
std::uint64_t parallel_count(std::uint64_t trials, unsigned threads, Trial&& trial) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::vector<std::uint64_t> counts(threads, 0);
  auto work = [&](unsigned worker) {
    std::uint64_t local = 0;
    for (std::uint64_t t = worker; t < trials; t += threads) local += trial(t) ? 1 : 0;
    counts[worker] = local;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

ProbabilityEstimate capacity_probability(unsigned n_qubits, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw ArgumentError("capacity_probability: trials must be >= 1");
  dim_for_spectrum(n_qubits);
  ProbabilityEstimate est;
  est.n_qubits = n_qubits;
  est.trials = trials;
  est.successes = parallel_count(trials, threads, [&](std::uint64_t t) {
    return sample_a_verdict(n_qubits, seed, t) != HullVerdict::outside;
  });
  est.p_hat = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.interval = wilson_interval(est.successes, trials);
  est.stderr_hat = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  return est;
}

double wendel_closed_form(unsigned m) {
  return static_cast<double>(m) * std::ldexp(1.0, 1 - static_cast<int>(m));
}

WendelEstimate wendel_oracle(unsigned m, std::uint64_t trials, std::uint64_t seed) {
  if (m < 2) throw ArgumentError("wendel_oracle: m must be >= 2");
  if (trials < 1) throw ArgumentError("wendel_oracle: trials must be >= 1");
  WendelEstimate est;
  est.m = m;
  est.trials = trials;
  est.closed_form = wendel_closed_form(m);
  const std::uint64_t failures = parallel_count(trials, 0, [&](std::uint64_t t) {
    Rng rng = Rng::substream(seed, t);
    std::vector<double> turns(m);
    for (double& x : turns) x = rng.uniform();
    std::sort(turns.begin(), turns.end());
    return sorted_max_gap(turns, 1.0) > 0.5;
  });
  est.p_fail_hat = static_cast<double>(failures) / static_cast<double>(trials);
  est.stderr_hat =
      std::sqrt(est.closed_form * (1.0 - est.closed_form) / static_cast<double>(trials));
  return est;
}

bool spectra_match(std::span<const cplx> a, std::span<const cplx> b, double tolerance) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const cplx& z : a) {
    std::size_t best = b.size();
    double best_sep = tolerance;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      const double sep = std::abs(std::arg(z * std::conj(b[k])));
      if (sep <= best_sep) {
        best_sep = sep;
        best = k;
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace ccd
