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

#include "qnetlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnetlab/circuit.hpp"
#include "qnetlab/entanglement.hpp"
#include "qnetlab/heisenberg.hpp"
#include "qnetlab/info.hpp"
#include "qnetlab/matrix_io.hpp"
#include "qnetlab/mub.hpp"
#include "qnetlab/protocols.hpp"

namespace qnet::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Emitter {
  std::string out_path;  // empty => stdout
  bool any_check_failed = false;

  void check(Json& node, const char* name, bool pass) {
    node[name] = pass;
    if (!pass) any_check_failed = true;
  }
};

std::uint64_t g_seed = 1;  // set once per invocation, echoed in reports

Json report_skeleton(const std::vector<std::string>& args) {
  Json doc;
  doc["tool"] = "qnetlab";
  doc["version"] = kVersion;
  doc["command"] = args;
  doc["inputs"] = Json::object();
  doc["inputs"]["seed"] = g_seed;
  doc["results"] = Json::object();
  return doc;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["criterion"] = v.criterion;
  if (v.witness_value) j["witness_value"] = *v.witness_value;
  return j;
}

Json vector_json(const std::vector<double>& v) { return Json(v); }

std::vector<int> parse_subset(const std::string& csv) {
  std::vector<int> subset;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    const int q = std::stoi(tok, &used);
    if (used != tok.size()) throw InvalidInput("bad qubit list '" + csv + "'");
    subset.push_back(q);
  }
  if (subset.empty()) throw InvalidInput("empty qubit list");
  return subset;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> values;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw InvalidInput("bad number list '" + csv + "'");
    values.push_back(v);
  }
  if (values.empty()) throw InvalidInput("empty number list");
  return values;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
  std::vector<std::string> values;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) values.push_back(tok);
  if (values.empty()) throw InvalidInput("empty list");
  return values;
}

int finish(const Json& doc, const Emitter& emitter, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (emitter.out_path.empty())
    out << text;
  else
    write_file(emitter.out_path, text);
  return emitter.any_check_failed ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::vector<std::string>& args, const std::string& path,
                 const std::string& initial,
                 const std::vector<std::string>& reduce, double tol,
                 Emitter emitter, std::ostream& out) {
  const CircuitFile circuit = parse_circuit(read_file(path));
  InitialState init = InitialState::all_zero();
  if (initial != "all-zero")
    init = InitialState::state(DensityMatrix(load_matrix(initial)));

  const QubitNetwork net = QubitNetwork(circuit.qubits).applied(circuit.gates);
  const Mat heisenberg = reconstruct_density(net, init);
  const Mat oracle = schrodinger_reference(circuit.gates, circuit.qubits, init);
  const double residual = hs_norm(heisenberg - oracle);

  Json doc = report_skeleton(args);
  doc["inputs"]["circuit"] = path;
  doc["inputs"]["initial"] = initial;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];
  results["qubits"] = circuit.qubits;
  results["gates"] = static_cast<int>(circuit.gates.size());
  results["density_matrix"] = matrix_to_json(heisenberg);
  if (!reduce.empty()) {
    Json reduced = Json::object();
    for (const std::string& csv : reduce)
      reduced[csv] = matrix_to_json(reduced_density(net, init, parse_subset(csv)));
    results["reduced"] = std::move(reduced);
  }
  results["dual_path_residual"] = residual;
  emitter.check(results, "dual_path_agreement", residual <= tol);
  return finish(doc, emitter, out);
}

// ---------------------------------------------------------------- entangle

bool is_bell_diagonal(const TwoQubitForm& f, double tol) {
  if (f.a.norm() > tol || f.b.norm() > tol) return false;
  Eigen::Matrix3d off = f.c;
  off.diagonal().setZero();
  return off.norm() <= tol;
}

int cmd_entangle(const std::vector<std::string>& args, const std::string& path,
                 const std::string& dims_text,
                 std::vector<std::string> criteria, double tol, Emitter emitter,
                 std::ostream& out) {
  std::pair<int, int> dims;
  if (dims_text == "2x2")
    dims = {2, 2};
  else if (dims_text == "2x3")
    dims = {2, 3};
  else
    throw CLI::ValidationError("--dims must be 2x2 or 2x3");

  const DensityMatrix rho{load_matrix(path)};
  if (rho.dim() != dims.first * dims.second)
    throw InvalidInput("matrix dimension does not match --dims");

  const bool all = std::find(criteria.begin(), criteria.end(), "all") !=
                   criteria.end();
  auto wanted = [&](const char* name) {
    return all ||
           std::find(criteria.begin(), criteria.end(), name) != criteria.end();
  };

  Json doc = report_skeleton(args);
  doc["inputs"]["matrix"] = path;
  doc["inputs"]["dims"] = dims_text;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];

  if (wanted("ppt")) results["ppt"] = verdict_json(ppt_verdict(rho, dims));
  if (wanted("reduction"))
    results["reduction"] = verdict_json(reduction_verdict(rho, dims));
  if (wanted("majorization"))
    results["majorization"] = verdict_json(majorization_verdict(rho, dims));
  if (dims == std::pair<int, int>{2, 2}) {
    const TwoQubitForm f = two_qubit_form(rho);
    if (wanted("geometric")) {
      const GeometricReport g = geometric_report(f);
      Json gj = verdict_json(g.verdict);
      gj["sum_c2"] = g.sum_c2;
      gj["a2"] = g.a2;
      gj["b2"] = g.b2;
      gj["length_threshold"] = g.length_threshold;
      gj["majorization_threshold"] = g.majorization_threshold;
      results["geometric"] = std::move(gj);
    }
    if (wanted("tetra") && is_bell_diagonal(f, 1e-8)) {
      const Eigen::Vector3d c = f.c.diagonal();
      const TetraMembership m = tetra_membership(c);
      Json tj;
      tj["c"] = std::vector<double>{c(0), c(1), c(2)};
      tj["in_tetrahedron"] = m.in_tetrahedron;
      tj["in_octohedron"] = m.in_octohedron;
      tj["status"] = m.in_octohedron ? to_string(Status::Separable)
                                     : to_string(Status::Entangled);
      results["tetra"] = std::move(tj);
    }
  }
  return finish(doc, emitter, out);
}

// ---------------------------------------------------------------- measures

int cmd_measures_shannon(const std::vector<std::string>& args,
                         const std::vector<double>& probs, Emitter emitter,
                         std::ostream& out) {
  Json doc = report_skeleton(args);
  doc["results"]["entropy_bits"] = shannon_entropy(probs);
  return finish(doc, emitter, out);
}

int cmd_measures_mutual(const std::vector<std::string>& args, int rows,
                        const std::vector<double>& cells, Emitter emitter,
                        std::ostream& out) {
  if (rows < 1 || cells.size() % rows != 0)
    throw InvalidInput("cell count must be a multiple of --rows");
  const int cols = static_cast<int>(cells.size()) / rows;
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = cells[r * cols + c];
  const JointDistribution joint(m);
  Json doc = report_skeleton(args);
  Json& results = doc["results"];
  results["joint_entropy_bits"] = joint_entropy(joint);
  results["conditional_entropy_bits"] = conditional_entropy(joint);
  results["mutual_information_bits"] = mutual_information(joint);
  return finish(doc, emitter, out);
}

int cmd_measures_holevo(const std::vector<std::string>& args,
                        const std::vector<double>& probs,
                        const std::vector<std::string>& paths, Emitter emitter,
                        std::ostream& out) {
  if (probs.size() != paths.size())
    throw InvalidInput("--probs and --states must have matching lengths");
  std::vector<Mat> states;
  states.reserve(paths.size());
  for (const std::string& p : paths)
    states.push_back(DensityMatrix(load_matrix(p)).mat());
  const Ensemble e(states, probs);
  // Diagnostic only: the bound is tight exactly for commuting members, but
  // no tolerance model is attached to near-commuting ensembles.
  double worst_commutator = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a + 1; b < states.size(); ++b)
      worst_commutator = std::max(
          worst_commutator, hs_norm(states[a] * states[b] - states[b] * states[a]));
  Json doc = report_skeleton(args);
  doc["results"]["holevo_chi_bits"] = holevo_chi(e);
  doc["results"]["source_entropy_bits"] = shannon_entropy(probs);
  doc["results"]["max_commutator_norm"] = worst_commutator;
  return finish(doc, emitter, out);
}

int cmd_measures_grouping(const std::vector<std::string>& args,
                          const std::vector<int>& merge,
                          const std::vector<double>& probs, double tol,
                          Emitter emitter, std::ostream& out) {
  if (merge.size() != 2) throw InvalidInput("--merge takes two indices");
  const double residual = grouping_residual(probs, merge[0], merge[1]);
  Json doc = report_skeleton(args);
  doc["inputs"]["tol"] = tol;
  doc["results"]["residual"] = residual;
  Emitter e = emitter;
  e.check(doc["results"], "axiom_holds", residual <= tol);
  return finish(doc, e, out);
}

int cmd_measures_dretske(const std::vector<std::string>& args, int index,
                         const std::vector<double>& conditional,
                         const std::vector<double>& probs, Emitter emitter,
                         std::ostream& out) {
  Json doc = report_skeleton(args);
  doc["results"]["information_bits"] = dretske_measure(probs, index, conditional);
  return finish(doc, emitter, out);
}

int cmd_measures_vn(const std::vector<std::string>& args,
                    const std::string& path, Emitter emitter,
                    std::ostream& out) {
  Json doc = report_skeleton(args);
  doc["results"]["von_neumann_entropy_bits"] =
      von_neumann_entropy(load_matrix(path));
  return finish(doc, emitter, out);
}

// ---------------------------------------------------------------- protocol

int cmd_protocol_teleport(const std::vector<std::string>& args, double theta,
                          double phi, double tol, Emitter emitter,
                          std::ostream& out) {
  const TeleportReport r = teleport_run(theta, phi);
  Json doc = report_skeleton(args);
  doc["inputs"]["theta"] = theta;
  doc["inputs"]["phi"] = phi;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];
  results["fidelity"] = r.fidelity();
  results["dual_path_residual"] = r.dual_path_residual;
  double worst_mid = 0.0;
  Json mids = Json::array();
  for (const Mat& m : r.mid_reduced) {
    worst_mid = std::max(worst_mid, hs_norm(m - Mat::Identity(2, 2) / 2.0));
    mids.push_back(matrix_to_json(m));
  }
  results["mid_reduced_states"] = std::move(mids);
  results["mid_mixedness_residual"] = worst_mid;
  results["sender_final_state"] = matrix_to_json(r.sender_residual_state());
  emitter.check(results, "fidelity_is_one", std::abs(r.fidelity() - 1.0) <= tol);
  emitter.check(results, "mid_states_maximally_mixed", worst_mid <= tol);
  emitter.check(results, "dual_path_agreement", r.dual_path_residual <= tol);
  return finish(doc, emitter, out);
}

int cmd_protocol_densecode(const std::vector<std::string>& args,
                           const std::string& bits, Emitter emitter,
                           std::ostream& out) {
  if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') ||
      (bits[1] != '0' && bits[1] != '1'))
    throw InvalidInput("--bits takes two binary digits, e.g. 01");
  const DenseCodeReport r = dense_code_run(bits[0] - '0', bits[1] - '0');
  Json doc = report_skeleton(args);
  doc["inputs"]["bits"] = bits;
  Json& results = doc["results"];
  results["decoded"] = std::to_string(r.decoded.first) +
                       std::to_string(r.decoded.second);
  results["outcome_distribution"] = std::vector<double>(
      r.outcome_distribution.begin(), r.outcome_distribution.end());
  results["dual_path_residual"] = r.dual_path_residual;
  emitter.check(results, "decoded_correctly", r.success());
  return finish(doc, emitter, out);
}

int cmd_protocol_swap(const std::vector<std::string>& args, double tol,
                      Emitter emitter, std::ostream& out) {
  const SwapReport r = entanglement_swap_run();
  Json doc = report_skeleton(args);
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];
  results["pre_pair_verdict"] = verdict_json(ppt_verdict(r.pre_pair_14, {2, 2}));
  results["averaged_pair_verdict"] =
      verdict_json(ppt_verdict(r.averaged_pair_14, {2, 2}));
  bool branches_maximal = true;
  Json branches = Json::array();
  for (const SwapBranch& b : r.branches) {
    Json bj;
    bj["record"] = b.record;
    bj["probability"] = b.probability;
    bj["schmidt_coefficients"] = vector_json(b.schmidt_coefficients);
    bj["ppt"] = verdict_json(b.ppt);
    branches.push_back(std::move(bj));
    const double target = 1.0 / std::sqrt(2.0);
    branches_maximal = branches_maximal &&
                       b.ppt.status == Status::Entangled &&
                       std::abs(b.schmidt_coefficients[0] - target) <= tol &&
                       std::abs(b.schmidt_coefficients[1] - target) <= tol;
  }
  results["branches"] = std::move(branches);
  results["dual_path_residual"] = r.dual_path_residual;
  emitter.check(results, "branches_maximally_entangled", branches_maximal);
  return finish(doc, emitter, out);
}

int cmd_protocol_bell(const std::vector<std::string>& args, double theta,
                      double phi, bool chsh, int sweep, bool csv, double tol,
                      Emitter emitter, std::ostream& out) {
  Json doc = report_skeleton(args);
  doc["inputs"]["theta"] = theta;
  doc["inputs"]["phi"] = phi;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];

  if (sweep > 0 && csv) {
    std::ostringstream table;
    table << "theta,phi,correlation\n";
    for (int i = 0; i < sweep; ++i)
      for (int j = 0; j < sweep; ++j) {
        const double a = i * M_PI / sweep;
        const double b = j * M_PI / sweep;
        table << a << ',' << b << ','
              << bell_experiment_run(a, b).correlation() << '\n';
      }
    if (emitter.out_path.empty())
      out << table.str();
    else
      write_file(emitter.out_path, table.str());
    return kOk;
  }

  const BellRunReport r = bell_experiment_run(theta, phi);
  results["joint"] = {{r.joint(0, 0), r.joint(0, 1)},
                      {r.joint(1, 0), r.joint(1, 1)}};
  results["correlation"] = r.correlation();
  results["dual_path_residual"] = r.dual_path_residual;
  if (chsh) {
    const double s = chsh_value();
    results["chsh"] = s;
    emitter.check(results, "chsh_at_tsirelson",
                  std::abs(std::abs(s) - 2.0 * std::sqrt(2.0)) <= tol);
    emitter.check(results, "chsh_exceeds_classical", std::abs(s) > 2.0);
  }
  return finish(doc, emitter, out);
}

int cmd_protocol_bccheat(const std::vector<std::string>& args, int committed,
                         int revealed, double tol, Emitter emitter,
                         std::ostream& out) {
  const BitCommitmentReport r = bc_epr_cheat_run(committed, revealed);
  Json doc = report_skeleton(args);
  doc["inputs"]["committed"] = committed;
  doc["inputs"]["revealed"] = revealed;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];
  results["honest_pass_probability"] = r.honest_pass;
  results["cheat_pass_probability"] = r.cheat_pass;
  const Mat half = Mat::Identity(2, 2) / 2.0;
  const double bob_residual =
      std::max({hs_norm(r.bob_honest_0 - half), hs_norm(r.bob_honest_1 - half),
                hs_norm(r.bob_cheat - half)});
  results["bob_premeasurement_residual"] = bob_residual;
  emitter.check(results, "cheat_always_passes",
                std::abs(r.cheat_pass - 1.0) <= tol);
  emitter.check(results, "bob_cannot_distinguish", bob_residual <= tol);
  return finish(doc, emitter, out);
}

int cmd_protocol_schumacher(const std::vector<std::string>& args, double p,
                            int block, double epsilon, Emitter emitter,
                            std::ostream& out) {
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = p;
  rho(1, 1) = 1.0 - p;
  const TypicalSubspaceSummary s = schumacher_report(rho, block, epsilon);
  Json doc = report_skeleton(args);
  doc["inputs"]["p"] = p;
  doc["inputs"]["block_length"] = block;
  doc["inputs"]["epsilon"] = epsilon;
  Json& results = doc["results"];
  results["entropy_bits"] = s.entropy_bits;
  results["typical_dimension"] = s.typical_dimension;
  results["typical_weight"] = s.typical_weight;
  results["qubit_rate"] =
      std::log2(static_cast<double>(std::max<std::uint64_t>(s.typical_dimension, 1))) /
      s.block_length;
  return finish(doc, emitter, out);
}

// --------------------------------------------------------------------- mub

int cmd_mub(const std::vector<std::string>& args, const std::string& mode,
            const std::string& path, double tol, Emitter emitter,
            std::ostream& out) {
  const Mat rho = load_matrix(path);
  const int d = static_cast<int>(rho.rows());
  Json doc = report_skeleton(args);
  doc["inputs"]["matrix"] = path;
  doc["inputs"]["tol"] = tol;
  Json& results = doc["results"];

  if (mode == "itot") {
    results["itot"] = itot(rho);
    return finish(doc, emitter, out);
  }
  const MubSet m = mub_bases(d);
  const MubStatistics stats = mub_statistics(rho, m);
  if (mode == "identity") {
    double sum = 0.0;
    Json per_basis = Json::array();
    for (int j = 0; j <= d; ++j) {
      std::vector<double> row(stats.table.cols());
      for (Eigen::Index i = 0; i < stats.table.cols(); ++i)
        row[i] = stats.table(j, i);
      const double value = bz_measure(row);
      per_basis.push_back(value);
      sum += value;
    }
    const double total = itot(rho);
    results["per_basis_measures"] = std::move(per_basis);
    results["sum"] = sum;
    results["itot"] = total;
    results["residual"] = std::abs(sum - total);
    emitter.check(results, "sum_identity_holds", std::abs(sum - total) <= tol);
    return finish(doc, emitter, out);
  }
  if (mode == "reconstruct") {
    const Mat back = reconstruct_from_mub(stats, m);
    const double error = hs_norm(back - rho);
    results["reconstructed"] = matrix_to_json(back);
    results["round_trip_error"] = error;
    emitter.check(results, "round_trip_within_tol", error <= tol);
    return finish(doc, emitter, out);
  }
  throw CLI::ValidationError("mub mode must be itot, identity or reconstruct");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Heisenberg-picture qubit network simulator and analyzer"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 1;
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--seed", seed, "seed echoed into reports");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a circuit file");
  std::string circuit_path, initial = "all-zero";
  std::vector<std::string> reduce;
  double sim_tol = 1e-10;
  simulate->add_option("circuit", circuit_path)->required();
  simulate->add_option("--initial", initial, "all-zero or a matrix file");
  simulate->add_option("--reduce", reduce, "comma-separated qubit subsets");
  simulate->add_option("--tol", sim_tol, "dual-path agreement tolerance");

  // entangle
  auto* entangle = app.add_subcommand("entangle", "separability analysis");
  std::string matrix_path, dims_text = "2x2";
  std::vector<std::string> criteria{"all"};
  double ent_tol = kPositivityTol;
  entangle->add_option("matrix", matrix_path)->required();
  entangle->add_option("--dims", dims_text, "2x2 or 2x3");
  entangle->add_option("--criteria", criteria,
                       "all|ppt|reduction|majorization|geometric|tetra");
  entangle->add_option("--tol", ent_tol, "positivity tolerance");

  // measures
  auto* measures = app.add_subcommand("measures", "information measures");
  measures->require_subcommand(1);
  std::vector<double> probs, cells;
  std::string conditional_csv, holevo_probs_csv, holevo_states_csv, merge_csv;
  int rows = 2, index = 0;
  double grouping_tol = 1e-12;
  std::string vn_path;
  auto* shannon = measures->add_subcommand("shannon", "entropy of a distribution");
  shannon->add_option("probs", probs)->required()->expected(-2);
  auto* mutual = measures->add_subcommand("mutual", "joint-distribution measures");
  mutual->add_option("--rows", rows, "row count of the joint table");
  mutual->add_option("cells", cells)->required()->expected(-2);
  auto* holevo = measures->add_subcommand("holevo", "ensemble bound");
  holevo->add_option("--probs", holevo_probs_csv, "comma-separated weights")
      ->required();
  holevo->add_option("--states", holevo_states_csv, "comma-separated files")
      ->required();
  auto* grouping = measures->add_subcommand("grouping", "grouping-axiom residual");
  grouping->add_option("--merge", merge_csv, "two outcome indices, e.g. 1,2")
      ->required();
  grouping->add_option("--tol", grouping_tol);
  grouping->add_option("probs", probs)->required()->expected(-2);
  auto* dretske = measures->add_subcommand("dretske", "single-event measure");
  dretske->add_option("--index", index)->required();
  dretske->add_option("--conditional", conditional_csv,
                      "comma-separated conditional distribution")
      ->required();
  dretske->add_option("probs", probs)->required()->expected(-2);
  auto* vn = measures->add_subcommand("vn", "von Neumann entropy of a matrix file");
  vn->add_option("matrix", vn_path)->required();

  // protocol
  auto* protocol = app.add_subcommand("protocol", "run a named protocol");
  protocol->require_subcommand(1);
  double theta = 0.7, phi = 0.3, proto_tol = 1e-10, chsh_tol = 1e-9;
  double source_p = 0.9, epsilon = 0.1;
  int block = 20, committed = 0, revealed = 0, sweep = 0;
  bool chsh = false, csv = false;
  std::string bits = "00";
  auto* teleport = protocol->add_subcommand("teleport", "five-qubit teleportation");
  teleport->add_option("--theta", theta);
  teleport->add_option("--phi", phi);
  teleport->add_option("--tol", proto_tol);
  auto* densecode = protocol->add_subcommand("densecode", "two bits on one qubit");
  densecode->add_option("--bits", bits, "two binary digits");
  auto* swap = protocol->add_subcommand("swap", "entanglement swapping");
  swap->add_option("--tol", proto_tol);
  auto* bell = protocol->add_subcommand("bell", "Bell experiment");
  bell->add_option("--theta", theta);
  bell->add_option("--phi", phi);
  bell->add_flag("--chsh", chsh, "evaluate CHSH at the canonical angles");
  bell->add_option("--sweep", sweep, "grid size for --csv output");
  bell->add_flag("--csv", csv, "emit a CSV angle sweep");
  bell->add_option("--tol", chsh_tol);
  auto* bccheat = protocol->add_subcommand("bccheat", "bit-commitment cheat");
  bccheat->add_option("--committed", committed);
  bccheat->add_option("--revealed", revealed);
  bccheat->add_option("--tol", proto_tol);
  auto* schumacher = protocol->add_subcommand("schumacher", "typical subspace");
  schumacher->add_option("--p", source_p, "larger eigen-probability");
  schumacher->add_option("--n", block, "block length (<= 60)");
  schumacher->add_option("--epsilon", epsilon, "entropy-rate window");

  // mub
  auto* mub = app.add_subcommand("mub", "mutually unbiased basis tools");
  std::string mub_mode, mub_path;
  double mub_tol = 1e-10;
  mub->add_option("mode", mub_mode, "itot|identity|reconstruct")->required();
  mub->add_option("matrix", mub_path)->required();
  mub->add_option("--tol", mub_tol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  g_seed = seed;
  Emitter emitter;
  emitter.out_path = out_path;
  try {
    if (*simulate)
      return cmd_simulate(args, circuit_path, initial, reduce, sim_tol,
                          emitter, out);
    if (*entangle)
      return cmd_entangle(args, matrix_path, dims_text, criteria, ent_tol,
                          emitter, out);
    if (*measures) {
      if (*shannon) return cmd_measures_shannon(args, probs, emitter, out);
      if (*mutual) return cmd_measures_mutual(args, rows, cells, emitter, out);
      if (*holevo)
        return cmd_measures_holevo(args, parse_double_list(holevo_probs_csv),
                                   parse_string_list(holevo_states_csv),
                                   emitter, out);
      if (*grouping) {
        const auto merge = parse_subset(merge_csv);
        return cmd_measures_grouping(args, merge, probs, grouping_tol, emitter,
                                     out);
      }
      if (*dretske)
        return cmd_measures_dretske(args, index,
                                    parse_double_list(conditional_csv), probs,
                                    emitter, out);
      if (*vn) return cmd_measures_vn(args, vn_path, emitter, out);
    }
    if (*protocol) {
      if (*teleport)
        return cmd_protocol_teleport(args, theta, phi, proto_tol, emitter, out);
      if (*densecode) return cmd_protocol_densecode(args, bits, emitter, out);
      if (*swap) return cmd_protocol_swap(args, proto_tol, emitter, out);
      if (*bell)
        return cmd_protocol_bell(args, theta, phi, chsh, sweep, csv, chsh_tol,
                                 emitter, out);
      if (*bccheat)
        return cmd_protocol_bccheat(args, committed, revealed, proto_tol,
                                    emitter, out);
      if (*schumacher)
        return cmd_protocol_schumacher(args, source_p, block, epsilon, emitter,
                                       out);
    }
    if (*mub) return cmd_mub(args, mub_mode, mub_path, mub_tol, emitter, out);
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kFile;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const MatrixFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidState;
  }
  err << "error: no subcommand selected\n";
  return kUsage;
}

}  // namespace qnet::cli
