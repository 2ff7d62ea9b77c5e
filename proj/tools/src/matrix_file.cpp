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

#include "ccd_cli/matrix_file.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccd::cli {

namespace {

cplx parse_pair(const Json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw ParseError("each entry must be a [re, im] pair of numbers");
  }
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite entry");
  return {re, im};
}

MatrixFile::Kind parse_kind(const std::string& kind) {
  if (kind == "unitary") return MatrixFile::Kind::unitary;
  if (kind == "ket") return MatrixFile::Kind::ket;
  if (kind == "density") return MatrixFile::Kind::density;
  throw ParseError("unknown kind '" + kind + "' (expected unitary, ket or density)");
}

void write_number(std::string& out, double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  out += buffer;
}

void write(std::string& out, const Json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (node.type()) {
    case Json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars (e.g. [re, im] pairs) stay on one line.
      const bool flat = std::all_of(node.begin(), node.end(),
                                    [](const auto& e) { return !e.is_structured(); });
      if (node.empty()) {
        out += "[]";
      } else if (flat) {
        out += "[";
        for (std::size_t j = 0; j < node.size(); ++j) {
          if (j) out += ", ";
          write(out, node[j], indent + 1);
        }
        out += "]";
      } else {
        out += "[\n";
        for (std::size_t j = 0; j < node.size(); ++j) {
          if (j) out += ",\n";
          out += inner;
          write(out, node[j], indent + 1);
        }
        out += "\n" + pad + "]";
      }
      return;
    }
    case Json::value_t::number_float:
      write_number(out, node.get<double>());
      return;
    default:
      out += node.dump();
  }
}

}  // namespace

ComplexMatrix MatrixFile::matrix() const {
  if (kind == Kind::ket) throw ParseError("expected a matrix, got a ket");
  return ComplexMatrix(dim(), data);
}

std::string to_string(MatrixFile::Kind kind) {
  switch (kind) {
    case MatrixFile::Kind::unitary: return "unitary";
    case MatrixFile::Kind::ket: return "ket";
    case MatrixFile::Kind::density: return "density";
  }
  return "unknown";
}

MatrixFile parse_matrix_file(const Json& doc) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("missing integer 'n'");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing string 'kind'");
  if (!doc.contains("data") || !doc["data"].is_array()) throw ParseError("missing array 'data'");
  MatrixFile file;
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxDenseQubits)) {
    throw ParseError("n must be in [1, " + std::to_string(kMaxDenseQubits) + "]");
  }
  file.n = static_cast<unsigned>(n);
  file.kind = parse_kind(doc["kind"].get<std::string>());
  const std::size_t dim = file.dim();
  const auto& data = doc["data"];
  if (file.kind == MatrixFile::Kind::ket) {
    if (data.size() != dim) throw ParseError("ket data must hold 2^n pairs");
    for (const auto& pair : data) file.data.push_back(parse_pair(pair));
  } else if (data.size() == dim && !data.empty() && data[0].is_array() && !data[0].empty() &&
             data[0][0].is_array()) {
    for (const auto& row : data) {
      if (!row.is_array() || row.size() != dim) throw ParseError("matrix rows must hold 2^n pairs");
      for (const auto& pair : row) file.data.push_back(parse_pair(pair));
    }
  } else if (data.size() == dim * dim) {
    for (const auto& pair : data) file.data.push_back(parse_pair(pair));
  } else {
    throw ParseError("matrix data must be 2^n rows of 2^n pairs");
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw ParseError("'meta' must be an object");
    for (auto it = doc["meta"].begin(); it != doc["meta"].end(); ++it) {
      file.meta[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    }
  }
  return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  return parse_matrix_file(doc);
}

Json pairs_to_json(std::span<const cplx> values) {
  Json out = Json::array();
  for (const cplx& z : values) out.push_back({z.real(), z.imag()});
  return out;
}

Json matrix_to_json(const ComplexMatrix& m, MatrixFile::Kind kind,
                              const std::map<std::string, std::string>& meta) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    rows.push_back(pairs_to_json(m.data().subspan(r * m.dim(), m.dim())));
  }
  Json out = {{"n", m.n_qubits()}, {"kind", to_string(kind)}, {"data", rows}};
  if (!meta.empty()) out["meta"] = meta;
  return out;
}

Json ket_to_json(std::span<const cplx> amplitudes,
                           const std::map<std::string, std::string>& meta) {
  Json out = {{"n", qubits_for_dim(amplitudes.size())},
                        {"kind", "ket"},
                        {"data", pairs_to_json(amplitudes)}};
  if (!meta.empty()) out["meta"] = meta;
  return out;
}

std::string dump_json(const Json& doc) {
  std::string out;
  write(out, doc, 0);
  out += "\n";
  return out;
}

}  // namespace ccd::cli
