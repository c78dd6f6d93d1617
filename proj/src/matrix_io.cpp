// Copyright 2026 The portraitmap Authors
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

#include "portrait/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "portrait/error.hpp"

namespace portrait {
namespace {

using nlohmann::json;

std::string number(double x) { return json(x).dump(); }

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "MatrixFile: " + what);
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "MatrixFile holds square matrices");
  std::ostringstream out;
  out << "{\n  \"dim\": " << m.rows() << ",\n  \"entries\": [\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ", ";
      out << '[' << number(m(i, j).real()) << ", " << number(m(i, j).imag()) << ']';
    }
    out << (i + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

ComplexMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    schema_error("\"dim\" must be a positive integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim == 0) schema_error("\"dim\" must be a positive integer");
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != dim)
    schema_error("\"entries\" must hold dim rows");

  std::vector<Complex> data;
  data.reserve(dim * dim);
  for (const json& row : doc["entries"]) {
    if (!row.is_array() || row.size() != dim) schema_error("each row must hold dim pairs");
    for (const json& pair : row) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        schema_error("entries must be [re, im] number pairs");
      data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  try {
    return ComplexMatrix(dim, dim, std::move(data));
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

void write_matrix_file(const ComplexMatrix& m, const std::filesystem::path& path) {
  const std::string text = matrix_to_json(m);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace portrait
