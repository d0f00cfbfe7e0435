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

#ifndef QNETLAB_CIRCUIT_HPP
#define QNETLAB_CIRCUIT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qnetlab/heisenberg.hpp"

namespace qnet {

// Circuit file grammar: a `qubits N` declaration followed by one gate per
// line, `GATE q [q2] [name=value]`. Gate names are case-insensitive,
// `#` starts a comment, blank lines are skipped.
//
//   qubits 2
//   H 1
//   CNOT 1 2        # control first
//   RY 1 theta=0.7

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct CircuitFile {
  int qubits = 0;
  std::vector<Gate> gates;
};

CircuitFile parse_circuit(const std::string& text);

}  // namespace qnet

#endif  // QNETLAB_CIRCUIT_HPP
