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

#include "qnetlab/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace qnet {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_qubit(const std::string& tok, int line, int qubits) {
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  if (value < 1 || value > qubits)
    throw ParseError(line, "qubit " + std::to_string(value) +
                               " is outside the declared range 1.." +
                               std::to_string(qubits));
  return value;
}

double parse_angle(const std::string& tok, int line) {
  const auto eq = tok.find('=');
  std::string key = eq == std::string::npos ? "" : lower(tok.substr(0, eq));
  std::string value = eq == std::string::npos ? "" : tok.substr(eq + 1);
  if (key != "theta" && key != "angle")
    throw ParseError(line, "expected theta=<value>, got '" + tok + "'");
  try {
    std::size_t used = 0;
    const double angle = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return angle;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed angle in '" + tok + "'");
  }
}

}  // namespace

CircuitFile parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  std::optional<int> qubits;
  CircuitFile file;

  while (std::getline(in, raw)) {
    ++line_number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto toks = tokens_of(raw);
    if (toks.empty()) continue;

    const std::string head = lower(toks[0]);
    if (!qubits) {
      if (head != "qubits")
        throw ParseError(line_number, "expected a 'qubits N' declaration");
      if (toks.size() != 2)
        throw ParseError(line_number, "'qubits' takes exactly one count");
      try {
        qubits = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError(line_number, "malformed qubit count '" + toks[1] + "'");
      }
      if (*qubits < 1 || *qubits > 8)
        throw ParseError(line_number, "qubit count must be in 1..8");
      file.qubits = *qubits;
      continue;
    }

    auto one_target = [&](auto make) {
      if (toks.size() != 2)
        throw ParseError(line_number, head + " takes exactly one qubit");
      file.gates.push_back(make(parse_qubit(toks[1], line_number, *qubits)));
    };
    auto rotation = [&](auto make) {
      if (toks.size() != 3)
        throw ParseError(line_number, head + " takes a qubit and theta=<value>");
      const int q = parse_qubit(toks[1], line_number, *qubits);
      file.gates.push_back(make(q, parse_angle(toks[2], line_number)));
    };
    auto two_targets = [&](auto make) {
      if (toks.size() != 3)
        throw ParseError(line_number, head + " takes exactly two qubits");
      const int a = parse_qubit(toks[1], line_number, *qubits);
      const int b = parse_qubit(toks[2], line_number, *qubits);
      if (a == b) throw ParseError(line_number, head + " qubits must differ");
      file.gates.push_back(make(a, b));
    };

    if (head == "h") one_target([](int q) { return Gate::h(q); });
    else if (head == "x") one_target([](int q) { return Gate::x(q); });
    else if (head == "y") one_target([](int q) { return Gate::y(q); });
    else if (head == "z") one_target([](int q) { return Gate::z(q); });
    else if (head == "rx") rotation([](int q, double a) { return Gate::rx(q, a); });
    else if (head == "ry") rotation([](int q, double a) { return Gate::ry(q, a); });
    else if (head == "rz") rotation([](int q, double a) { return Gate::rz(q, a); });
    else if (head == "cnot") two_targets([](int a, int b) { return Gate::cnot(a, b); });
    else if (head == "cz") two_targets([](int a, int b) { return Gate::cz(a, b); });
    else throw ParseError(line_number, "unknown gate '" + toks[0] + "'");
  }

  if (!qubits) throw ParseError(line_number, "missing 'qubits N' declaration");
  return file;
}

}  // namespace qnet
