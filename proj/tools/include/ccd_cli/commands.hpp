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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccd::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUnsupportedParity = 2,
  kExitBranchFailure = 3,
  kExitUsage = 64,
};

/// Named overrides settable as --tol.<name>.
struct Tolerances {
  std::optional<double> residual;  // decompose; default 1e-8 * N
  double membership = 1e-8;        // verify K / sp_block / a_algebra
  double certify = 1e-8;           // verify entangler / finagler
  double angular = 1e-9;           // capacity hull verdict
  double normalization = 1e-8;     // concurrence
  double monotone = 1e-9;          // monotone: avg_after <= c_before + tol
  double closed_form = 1e-8;       // monotone: POVM factor match
  double convexity = 1e-8;
  double purity = 1e-8;
};

enum class OutputFormat { json, csv };

struct SampleConfig {
  std::vector<unsigned> n_list;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool timing = false;  // fill wall_ms; otherwise 0 so output is byte-identical
  OutputFormat format = OutputFormat::csv;
};

struct MonotoneCommandConfig {
  unsigned n = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

int cmd_decompose(const std::filesystem::path& input, const Tolerances& tol, std::ostream& out);
int cmd_capacity(const std::filesystem::path& input, const Tolerances& tol, std::ostream& out);
int cmd_concurrence(const std::filesystem::path& input, const Tolerances& tol, std::ostream& out);
int cmd_sample(const SampleConfig& config, std::ostream& out);
int cmd_verify(const std::filesystem::path& input, const std::string& group,
               const Tolerances& tol, std::ostream& out);
int cmd_monotone(const MonotoneCommandConfig& config, const Tolerances& tol, std::ostream& out);

/// Parses argv, runs one subcommand and maps errors onto exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccd::cli
