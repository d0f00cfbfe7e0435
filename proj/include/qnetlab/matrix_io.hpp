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

#ifndef QNETLAB_MATRIX_IO_HPP
#define QNETLAB_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "qnetlab/operators.hpp"

namespace qnet {

// Matrix files are JSON documents with a "dim" field and a row-major
// "entries" array whose cells are [re, im] pairs:
//
//   { "dim": 2, "entries": [[[1,0],[0,0]], [[0,0],[0,0]]] }

class MatrixFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mat parse_matrix_json(const std::string& text);
Mat load_matrix(const std::string& path);  // throws FileError / MatrixFormatError

nlohmann::ordered_json matrix_to_json(const Mat& m);
std::string format_matrix(const Mat& m);

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qnet

#endif  // QNETLAB_MATRIX_IO_HPP
