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

#include "ccd_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccd/capacity.hpp"
#include "ccd/cartan.hpp"
#include "ccd/decomposition.hpp"
#include "ccd/errors.hpp"
#include "ccd/forms.hpp"
#include "ccd/intertwiners.hpp"
#include "ccd/monotone.hpp"
#include "ccd_cli/matrix_file.hpp"

namespace ccd::cli {

namespace {

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

MatrixFile read_kind(const std::filesystem::path& input, MatrixFile::Kind expected) {
  MatrixFile file = read_matrix_file(input);
  if (file.kind != expected) {
    throw ParseError("expected kind '" + to_string(expected) + "', got '" + to_string(file.kind) +
                     "'");
  }
  return file;
}

Json matrix_checks(const ComplexMatrix& m) {
  const cplx det = determinant(m);
  return {{"unitarity_defect", unitarity_defect(m)}, {"determinant", {det.real(), det.imag()}}};
}

}  // namespace

int cmd_decompose(const std::filesystem::path& input, const Tolerances& tol, std::ostream& out) {
  const ComplexMatrix v = read_kind(input, MatrixFile::Kind::unitary).matrix();
  const double limit = tol.residual.value_or(kCcdResidualScale * static_cast<double>(v.dim()));
  // The library rejects residuals above its own bound; the CLI applies --tol.residual itself.
  const CcdFactors f = ccd(v, {}, std::numeric_limits<double>::infinity());
  const double k1_residual = k_membership_residual(f.k1);
  const double k2_residual = k_membership_residual(f.k2);
  const bool pass = f.residual <= limit;
  Json doc;
  doc["n"] = v.n_qubits();
  doc["residual"] = f.residual;
  doc["tolerance"] = limit;
  doc["pass"] = pass;
  doc["branch_flips"] = f.branch_flips;
  doc["d"] = pairs_to_json(f.d);
  doc["k1_in_K"] = k1_residual <= tol.membership;
  doc["k1_membership_residual"] = k1_residual;
  doc["k2_in_K"] = k2_residual <= tol.membership;
  doc["k2_membership_residual"] = k2_residual;
  doc["a_group_defect"] = a_group_defect(f.a);
  doc["k1"] = matrix_to_json(f.k1, MatrixFile::Kind::unitary);
  doc["a"] = matrix_to_json(f.a, MatrixFile::Kind::unitary);
  doc["k2"] = matrix_to_json(f.k2, MatrixFile::Kind::unitary);
  out << dump_json(doc);
  return pass ? kExitPass : kExitFail;
}

int cmd_capacity(const std::filesystem::path& input, const Tolerances& tol, std::ostream& out) {
  const ComplexMatrix v = read_kind(input, MatrixFile::Kind::unitary).matrix();
  const CapacityReport report = capacity_report(v);
  Json doc;
  doc["n"] = v.n_qubits();
  doc["spectrum"] = pairs_to_json(report.spectrum.points);
  doc["zero_in_hull"] = std::string(to_string(hull_contains_zero(report.spectrum, tol.angular)));
  doc["max_angular_gap"] = max_angular_gap(report.spectrum.points);
  doc["kappa"] = report.kappa;
  doc["kappa_pairwise_lower"] = report.kappa_pairwise_lower;
  doc["witness"] = pairs_to_json(report.argmax_witness);
  out << dump_json(doc);
  return kExitPass;
}

int cmd_concurrence(const std::filesystem::path& input, const Tolerances& tol,
                    std::ostream& out) {
  const MatrixFile file = read_matrix_file(input);
  Json doc;
  doc["n"] = file.n;
  doc["kind"] = to_string(file.kind);
  if (file.kind == MatrixFile::Kind::ket) {
    const Ket psi(file.data);
    const double c = concurrence(psi, tol.normalization);
    doc["concurrence"] = c;
    doc["tangle"] = c * c;
  } else if (file.kind == MatrixFile::Kind::density) {
    const DensityMatrix rho(file.matrix());
    const double c = mixed_concurrence(rho);
    doc["concurrence"] = c;
    doc["tangle"] = c * c;
  } else {
    throw ParseError("concurrence expects a ket or density file");
  }
  out << dump_json(doc);
  return kExitPass;
}

int cmd_sample(const SampleConfig& config, std::ostream& out) {
  if (config.trials < 1) throw ArgumentError("--trials must be >= 1");
  if (config.n_list.empty()) throw ArgumentError("--n needs at least one value");
  for (unsigned n : config.n_list) {
    if (n % 2 != 0) throw UnsupportedParity("sample: n = " + std::to_string(n) + " is odd");
  }
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n,trials,p_hat,ci_lo,ci_hi,seed,wall_ms\n";
  for (unsigned n : config.n_list) {
    const auto start = std::chrono::steady_clock::now();
    const ProbabilityEstimate est = capacity_probability(n, config.trials, config.seed, config.threads);
    const double wall_ms =
        config.timing ? std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start).count()
                      : 0.0;
    csv << n << ',' << config.trials << ',' << format_double(est.p_hat) << ','
        << format_double(est.interval.lo) << ',' << format_double(est.interval.hi) << ','
        << config.seed << ',' << format_double(wall_ms) << '\n';
    rows.push_back({{"n", n},
                    {"trials", config.trials},
                    {"p_hat", est.p_hat},
                    {"ci_lo", est.interval.lo},
                    {"ci_hi", est.interval.hi},
                    {"seed", config.seed},
                    {"wall_ms", wall_ms}});
  }
  if (config.format == OutputFormat::csv) {
    out << csv.str();
  } else {
    out << dump_json(Json{{"rows", rows}});
  }
  return kExitPass;
}

int cmd_verify(const std::filesystem::path& input, const std::string& group,
               const Tolerances& tol, std::ostream& out) {
  const ComplexMatrix m = read_kind(input, MatrixFile::Kind::unitary).matrix();
  Json doc;
  doc["n"] = m.n_qubits();
  doc["group"] = group;
  bool pass = false;
  if (group == "K") {
    const double residual = k_membership_residual(m);
    pass = is_in_K(m, tol.membership);
    doc["residual"] = residual;
  } else if (group == "sp_block") {
    if (m.n_qubits() % 2 == 0) {
      throw UnsupportedParity("sp_block: the block-symplectic form applies to odd n only");
    }
    const double residual = sp_block_defect(m);
    pass = residual <= tol.membership;
    doc["residual"] = residual;
  } else if (group == "entangler" || group == "finagler") {
    const auto kind = group == "entangler" ? IntertwinerKind::entangler : IntertwinerKind::finagler;
    const Certificate cert = certify(m, kind, tol.certify);
    const bool special = unitarity_defect(m) <= tol.certify * static_cast<double>(m.dim()) &&
                         std::abs(determinant(m) - 1.0) <= tol.certify * static_cast<double>(m.dim());
    pass = cert.ok && special;
    doc["certificate"] = cert.ok;
    doc["special_unitary"] = special;
    doc["xi"] = {cert.xi.real(), cert.xi.imag()};
    doc["residual"] = cert.residual;
  } else if (group == "a_algebra") {
    const double residual = a_group_defect(m);
    pass = residual <= tol.membership;
    doc["residual"] = residual;
  } else {
    throw ArgumentError("unknown group '" + group + "'");
  }
  doc["pass"] = pass;
  doc["checks"] = matrix_checks(m);
  out << dump_json(doc);
  return pass ? kExitPass : kExitFail;
}

int cmd_monotone(const MonotoneCommandConfig& config, const Tolerances& tol, std::ostream& out) {
  MonotoneConfig mc;
  mc.n_qubits = config.n;
  mc.trials = config.trials;
  mc.seed = config.seed;
  mc.monotone_tolerance = tol.monotone;
  mc.closed_form_tolerance = tol.closed_form;
  mc.convexity_tolerance = tol.convexity;
  mc.purity_tolerance = tol.purity;
  const MonotoneReport report = monotone_sweep(mc);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"check", v.check}, {"trial", v.trial}, {"excess", v.excess}});
  }
  Json doc;
  doc["n"] = config.n;
  doc["trials"] = config.trials;
  doc["seed"] = config.seed;
  doc["pass"] = report.passed();
  doc["povm_trials"] = report.povm_trials;
  doc["povm_violations"] = report.povm_violations;
  doc["max_closed_form_error"] = report.max_closed_form_error;
  doc["max_equal_qr_error"] = report.max_equal_qr_error;
  doc["convexity_trials"] = report.convexity_trials;
  doc["convexity_violations"] = report.convexity_violations;
  doc["purity_trials"] = report.purity_trials;
  doc["max_purity_error"] = report.max_purity_error;
  doc["violations"] = violations;
  out << dump_json(doc);
  return report.passed() ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrence canonical decomposition, capacity and monotonicity tools", "ccd"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format;  // empty: csv for sample, json otherwise
  Tolerances tol;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Write the report here instead of stdout");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol.residual", tol.residual, "Decomposition residual bound");
    sub->add_option("--tol.membership", tol.membership, "K / A / symplectic membership");
    sub->add_option("--tol.certify", tol.certify, "Entangler / finagler certificate");
    sub->add_option("--tol.angular", tol.angular, "Hull verdict angular tolerance");
    sub->add_option("--tol.normalization", tol.normalization, "Ket normalization");
    sub->add_option("--tol.monotone", tol.monotone, "POVM monotonicity slack");
    sub->add_option("--tol.closed_form", tol.closed_form, "POVM closed-form match");
    sub->add_option("--tol.convexity", tol.convexity, "Convexity slack");
    sub->add_option("--tol.purity", tol.purity, "Pure-state consistency");
  };

  auto* decompose = app.add_subcommand("decompose", "CCD factors of an even-n unitary");
  auto* capacity = app.add_subcommand("capacity", "Concurrence spectrum, hull verdict and kappa");
  auto* concurrence_cmd = app.add_subcommand("concurrence", "Concurrence of a ket or density file");
  auto* verify = app.add_subcommand("verify", "Membership and intertwiner certificates");
  for (auto* sub : {decompose, capacity, concurrence_cmd, verify}) {
    sub->add_option("--input", input, "Matrix file (JSON)")->required();
    add_common(sub);
    add_tolerances(sub);
  }
  std::string group;
  verify->add_option("--group", group, "Group or structure to test")
      ->required()
      ->check(CLI::IsMember({"K", "sp_block", "entangler", "finagler", "a_algebra"}));

  SampleConfig sample_config;
  std::optional<std::uint64_t> sample_seed;
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of P[kappa = 1] on A");
  sample->add_option("--n", sample_config.n_list, "Even qubit counts")->delimiter(',')->required();
  sample->add_option("--trials", sample_config.trials, "Trials per n")->required();
  sample->add_option("--seed", sample_seed, "Base seed")->required();
  sample->add_option("--threads", sample_config.threads, "Worker threads (0 = all cores)");
  sample->add_flag("--timing", sample_config.timing, "Record wall_ms (breaks byte-identity)");
  add_common(sample);

  MonotoneCommandConfig monotone_config;
  std::optional<std::uint64_t> monotone_seed;
  auto* monotone = app.add_subcommand("monotone", "POVM monotonicity and convexity sweeps");
  monotone->add_option("--n", monotone_config.n, "Even qubit count");
  monotone->add_option("--trials", monotone_config.trials, "Trials");
  monotone->add_option("--seed", monotone_seed, "Base seed")->required();
  add_common(monotone);
  add_tolerances(monotone);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (format.empty()) format = sample->parsed() ? "csv" : "json";
  if (format == "csv" && !sample->parsed()) {
    err << "error: --format csv is available for sample only\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot write '" << output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(input, tol, *sink);
    if (capacity->parsed()) return cmd_capacity(input, tol, *sink);
    if (concurrence_cmd->parsed()) return cmd_concurrence(input, tol, *sink);
    if (verify->parsed()) return cmd_verify(input, group, tol, *sink);
    if (sample->parsed()) {
      sample_config.seed = *sample_seed;
      sample_config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
      return cmd_sample(sample_config, *sink);
    }
    if (monotone->parsed()) {
      monotone_config.seed = *monotone_seed;
      return cmd_monotone(monotone_config, tol, *sink);
    }
  } catch (const UnsupportedParity& e) {
    err << "error: unsupported parity: " << e.what() << '\n';
    return kExitUnsupportedParity;
  } catch (const BranchSelectionError& e) {
    err << "error: branch selection failed: " << e.what() << '\n';
    return kExitBranchFailure;
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return kExitFail;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace ccd::cli
