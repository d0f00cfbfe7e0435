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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qnetlab/circuit.hpp"
#include "qnetlab/commands.hpp"
#include "qnetlab/matrix_io.hpp"

using namespace qnet;
using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
  json doc;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.doc = json::parse(r.out);
  return r;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

std::string singlet_json() {
  return R"({"dim": 4, "entries": [
    [[0,0],[0,0],[0,0],[0,0]],
    [[0,0],[0.5,0],[-0.5,0],[0,0]],
    [[0,0],[-0.5,0],[0.5,0],[0,0]],
    [[0,0],[0,0],[0,0],[0,0]]]})";
}

}  // namespace

TEST_CASE("parse_circuit") {
  SUBCASE("bell pair") {
    const CircuitFile f = parse_circuit("qubits 2\nH 1\nCNOT 1 2\n");
    CHECK(f.qubits == 2);
    REQUIRE(f.gates.size() == 2);
    CHECK(f.gates[0].kind == Gate::Kind::H);
    CHECK(f.gates[1].kind == Gate::Kind::CNOT);
    CHECK(f.gates[1].targets == std::vector<int>{1, 2});
  }
  SUBCASE("teleportation-sized file with comments and parameters") {
    const std::string text =
        "# five qubits\n"
        "qubits 5\n"
        "RY 1 theta=0.7\n"
        "rz 1 theta=0.3\n"
        "H 4\n"
        "CNOT 4 5\n"
        "CNOT 1 4\n"
        "H 1\n"
        "CNOT 1 2\n"
        "CNOT 4 3\n"
        "CZ 2 5\n"
        "CNOT 3 5\n";
    const CircuitFile f = parse_circuit(text);
    CHECK(f.qubits == 5);
    CHECK(f.gates.size() == 10);
    CHECK(f.gates[0].angle == doctest::Approx(0.7));
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_circuit("qubits 2\nCNOT 1 9\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_circuit("qubits 2\nFROB 1\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("H 1\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nRY 1 theta=zero\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCNOT 1 1\n"), ParseError);
  }
}

TEST_CASE("matrix JSON round trip") {
  const Mat rho = random_density_matrix(3, 2, 5150).mat();
  const Mat back = parse_matrix_json(format_matrix(rho));
  CHECK(hs_norm(back - rho) <= 1e-15);
  CHECK_THROWS_AS(parse_matrix_json("{"), MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"dim": 2})"), MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"dim": 2, "entries": [[1,2],[3,4]]})"),
                  MatrixFormatError);
}

TEST_CASE("simulate command") {
  const auto circuit = temp_file("qnetlab_bell.qc", "qubits 2\nH 1\nCNOT 1 2\n");
  const RunResult r =
      run({"simulate", circuit.string(), "--reduce", "1", "--reduce", "1,2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.doc["results"]["dual_path_agreement"] == true);
  CHECK(r.doc["results"]["qubits"] == 2);
  const auto& reduced = r.doc["results"]["reduced"]["1"];
  CHECK(reduced["dim"] == 2);
  CHECK(std::abs(reduced["entries"][0][0][0].get<double>() - 0.5) <= 1e-12);
  // Full-density echo matches a direct parse.
  const Mat full = parse_matrix_json(r.doc["results"]["density_matrix"].dump());
  CHECK(std::abs(full(0, 0).real() - 0.5) <= 1e-12);
}

TEST_CASE("simulate accepts a matrix initial state") {
  const auto circuit = temp_file("qnetlab_one.qc", "qubits 1\nX 1\n");
  const auto initial = temp_file(
      "qnetlab_init.json", R"({"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})");
  const RunResult r =
      run({"simulate", circuit.string(), "--initial", initial.string()});
  CHECK(r.code == cli::kOk);
  const Mat rho = parse_matrix_json(r.doc["results"]["density_matrix"].dump());
  CHECK(std::abs(rho(1, 1).real() - 1.0) <= 1e-12);
}

TEST_CASE("entangle command on the singlet") {
  const auto matrix = temp_file("qnetlab_singlet.json", singlet_json());
  const RunResult r = run({"entangle", matrix.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.doc["results"]["ppt"]["status"] == "Entangled");
  CHECK(std::abs(r.doc["results"]["ppt"]["witness_value"].get<double>() + 0.5) <=
        1e-9);
  CHECK(r.doc["results"]["reduction"]["status"] == "Entangled");
  CHECK(r.doc["results"]["majorization"]["status"] == "Entangled");
  CHECK(r.doc["results"]["geometric"]["status"] == "Entangled");
  CHECK(r.doc["results"]["tetra"]["in_octohedron"] == false);
}

TEST_CASE("measures commands") {
  SUBCASE("shannon") {
    const RunResult r = run({"measures", "shannon", "0.5", "0.3", "0.2"});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["entropy_bits"].get<double>() -
                   1.4854752972273344) <= 1e-12);
  }
  SUBCASE("mutual on correlated bits") {
    const RunResult r =
        run({"measures", "mutual", "--rows", "2", "0.5", "0", "0", "0.5"});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["mutual_information_bits"].get<double>() -
                   1.0) <= 1e-12);
  }
  SUBCASE("grouping worked instance") {
    const RunResult r = run({"measures", "grouping", "--merge", "1,2", "0.5",
                             "0.3333333333333333", "0.1666666666666667"});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["results"]["axiom_holds"] == true);
  }
  SUBCASE("vn on a matrix file") {
    const auto matrix = temp_file(
        "qnetlab_mixed.json",
        R"({"dim": 2, "entries": [[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
    const RunResult r = run({"measures", "vn", matrix.string()});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["von_neumann_entropy_bits"].get<double>() -
                   1.0) <= 1e-12);
  }
  SUBCASE("holevo over two pure states") {
    const auto zero = temp_file(
        "qnetlab_zero.json",
        R"({"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})");
    const auto one = temp_file(
        "qnetlab_one.json",
        R"({"dim": 2, "entries": [[[0,0],[0,0]],[[0,0],[1,0]]]})");
    const RunResult r =
        run({"measures", "holevo", "--probs", "0.5,0.5", "--states",
             zero.string() + "," + one.string()});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["holevo_chi_bits"].get<double>() - 1.0) <=
          1e-10);
  }
}

TEST_CASE("protocol commands") {
  SUBCASE("teleport reports unit fidelity") {
    const RunResult r = run({"protocol", "teleport", "--theta", "0.7"});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["fidelity"].get<double>() - 1.0) <= 1e-10);
    CHECK(r.doc["results"]["fidelity_is_one"] == true);
  }
  SUBCASE("densecode decodes all messages") {
    for (const char* bits : {"00", "01", "10", "11"}) {
      const RunResult r = run({"protocol", "densecode", "--bits", bits});
      CHECK(r.code == cli::kOk);
      CHECK(r.doc["results"]["decoded"] == bits);
    }
  }
  SUBCASE("bell with chsh") {
    const RunResult r = run({"protocol", "bell", "--chsh"});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["chsh"].get<double>() -
                   2.0 * std::sqrt(2.0)) <= 1e-9);
  }
  SUBCASE("bell sweep emits CSV") {
    const RunResult r =
        run({"protocol", "bell", "--sweep", "2", "--csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("theta,phi,correlation", 0) == 0);
  }
  SUBCASE("bccheat") {
    const RunResult r =
        run({"protocol", "bccheat", "--committed", "0", "--revealed", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(std::abs(r.doc["results"]["honest_pass_probability"].get<double>() -
                   0.5) <= 1e-12);
    CHECK(std::abs(r.doc["results"]["cheat_pass_probability"].get<double>() -
                   1.0) <= 1e-10);
  }
  SUBCASE("swap") {
    const RunResult r = run({"protocol", "swap"});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["results"]["branches_maximally_entangled"] == true);
    CHECK(r.doc["results"]["averaged_pair_verdict"]["status"] == "Separable");
  }
}

TEST_CASE("mub commands") {
  const auto matrix = temp_file(
      "qnetlab_q.json",
      R"({"dim": 2, "entries": [[[0.7,0],[0.2,0.1]],[[0.2,-0.1],[0.3,0]]]})");
  SUBCASE("itot") {
    const RunResult r = run({"mub", "itot", matrix.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["results"]["itot"].get<double>() > 0.0);
  }
  SUBCASE("identity") {
    const RunResult r = run({"mub", "identity", matrix.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["results"]["sum_identity_holds"] == true);
  }
  SUBCASE("reconstruct") {
    const RunResult r = run({"mub", "reconstruct", matrix.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["results"]["round_trip_within_tol"] == true);
  }
}

TEST_CASE("determinism: identical invocations give identical bytes") {
  const auto matrix = temp_file("qnetlab_singlet2.json", singlet_json());
  const RunResult a = run({"entangle", matrix.string(), "--criteria", "all"});
  const RunResult b = run({"entangle", matrix.string(), "--criteria", "all"});
  CHECK(a.out == b.out);
  const RunResult c = run({"protocol", "teleport", "--theta", "1.234"});
  const RunResult d = run({"protocol", "teleport", "--theta", "1.234"});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  SUBCASE("usage") {
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
  }
  SUBCASE("help succeeds") {
    const RunResult r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("simulate") != std::string::npos);
  }
  SUBCASE("missing file") {
    CHECK(run({"entangle", "/nonexistent/file.json"}).code == cli::kFile);
    CHECK(run({"simulate", "/nonexistent/file.qc"}).code == cli::kFile);
  }
  SUBCASE("parse errors") {
    const auto bad_circuit = temp_file("qnetlab_bad.qc", "qubits 2\nQUUX 1\n");
    CHECK(run({"simulate", bad_circuit.string()}).code == cli::kParse);
    const auto bad_matrix = temp_file("qnetlab_bad.json", "{\"dim\": 2}");
    CHECK(run({"entangle", bad_matrix.string()}).code == cli::kParse);
  }
  SUBCASE("invalid state") {
    const auto not_state = temp_file(
        "qnetlab_notstate.json",
        R"({"dim": 2, "entries": [[[2,0],[0,0]],[[0,0],[-1,0]]]})");
    CHECK(run({"entangle", not_state.string()}).code == cli::kInvalidState);
  }
  SUBCASE("failed check") {
    // An impossible tolerance forces the dual-path check to fail.
    const auto circuit = temp_file("qnetlab_c.qc", "qubits 2\nH 1\nCNOT 1 2\n");
    CHECK(run({"simulate", circuit.string(), "--tol", "0"}).code ==
          cli::kCheckFailed);
  }
}

TEST_CASE("--out writes the report to a file") {
  const auto target = std::filesystem::temp_directory_path() / "qnetlab_report.json";
  std::filesystem::remove(target);
  const RunResult r =
      run({"--out", target.string(), "measures", "shannon", "0.5", "0.5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  const json doc = json::parse(read_file(target.string()));
  CHECK(std::abs(doc["results"]["entropy_bits"].get<double>() - 1.0) <= 1e-12);
  std::filesystem::remove(target);
}
