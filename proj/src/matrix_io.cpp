// Copyright 2026 The qnetlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnetlab/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace qnet {

Mat parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MatrixFormatError(std::string("matrix file is not valid JSON: ") +
                            e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
    throw MatrixFormatError("matrix file needs 'dim' and 'entries' fields");
  if (!doc["dim"].is_number_integer())
    throw MatrixFormatError("'dim' must be an integer");
  const int dim = doc["dim"].get<int>();
  if (dim < 1 || dim > 256)
    throw MatrixFormatError("'dim' must be in 1..256");
  const auto& rows = doc["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw MatrixFormatError("'entries' must hold exactly dim rows");

  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw MatrixFormatError("row " + std::to_string(r) +
                              " must hold exactly dim cells");
    for (int c = 0; c < dim; ++c) {
      const auto& cell = row[c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw MatrixFormatError("cell (" + std::to_string(r) + "," +
                                std::to_string(c) + ") must be a [re, im] pair");
      m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  if (!is_finite(m)) throw MatrixFormatError("matrix has non-finite entries");
  return m;
}

Mat load_matrix(const std::string& path) {
  return parse_matrix_json(read_file(path));
}

nlohmann::ordered_json matrix_to_json(const Mat& m) {
  nlohmann::ordered_json doc;
  doc["dim"] = static_cast<int>(m.rows());
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

std::string format_matrix(const Mat& m) { return matrix_to_json(m).dump(2); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace qnet
