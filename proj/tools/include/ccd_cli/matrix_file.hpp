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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ccd/linalg.hpp"
#include "vendor_json.hpp"

namespace ccd::cli {

/// Input/output file shape: {"n", "kind", "data": [re, im] pairs, "meta"}.
/// Matrices are row-major nested rows (a flat list of N*N pairs is also
/// accepted); kets are flat.
struct MatrixFile {
  enum class Kind { unitary, ket, density };

  unsigned n = 0;
  Kind kind = Kind::unitary;
  std::vector<cplx> data;  // row-major N*N, or N for kets
  std::map<std::string, std::string> meta;

  std::size_t dim() const noexcept { return std::size_t{1} << n; }
  ComplexMatrix matrix() const;
};

/// Raised for malformed files; maps to exit code 64.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(MatrixFile::Kind kind);

MatrixFile parse_matrix_file(const Json& doc);
MatrixFile read_matrix_file(const std::filesystem::path& path);

Json matrix_to_json(const ComplexMatrix& m, MatrixFile::Kind kind,
                              const std::map<std::string, std::string>& meta = {});
Json ket_to_json(std::span<const cplx> amplitudes,
                           const std::map<std::string, std::string>& meta = {});
Json pairs_to_json(std::span<const cplx> values);

/// Serializes with every float at 17 significant digits (round-trip safe).
std::string dump_json(const Json& doc);

}  // namespace ccd::cli
