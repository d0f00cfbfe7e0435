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

#include "qnetlab/protocols.hpp"

#include <cmath>

#include "qnetlab/info.hpp"

namespace qnet {

namespace {

double dual_path_residual_of(const std::vector<Gate>& circuit, int n) {
  const QubitNetwork net = QubitNetwork(n).applied(circuit);
  const Mat heisenberg = reconstruct_density(net, InitialState::all_zero());
  const Mat oracle = schrodinger_reference(circuit, n, InitialState::all_zero());
  return hs_norm(heisenberg - oracle);
}

// Projects the computational value `bits` of the listed qubits out of rho
// and returns the (unnormalized) state of the remaining qubits.
Mat project_records(const Mat& rho, int n, const std::vector<int>& qubits,
                    int bits) {
  const long dim = rho.rows();
  std::vector<long> kept;
  for (long idx = 0; idx < dim; ++idx) {
    bool match = true;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      const int want = (bits >> (qubits.size() - 1 - k)) & 1;
      const int have = static_cast<int>((idx >> (n - qubits[k])) & 1);
      if (want != have) {
        match = false;
        break;
      }
    }
    if (match) kept.push_back(idx);
  }
  Mat out(kept.size(), kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < kept.size(); ++c)
      out(r, c) = rho(kept[r], kept[c]);
  return out;
}

Vec prepared_state(double theta, double phi) {
  const Mat ry = Gate::ry(1, theta).local_matrix();
  const Mat rz = Gate::rz(1, phi).local_matrix();
  Vec zero(2);
  zero << 1, 0;
  return rz * (ry * zero);
}

}  // namespace

double TeleportReport::fidelity() const {
  const Complex f = target_state.adjoint() * final_reduced[4] * target_state;
  return f.real();
}

TeleportReport teleport_run(double theta, double phi) {
  const std::vector<Gate> bell_stage = {
      Gate::ry(1, theta), Gate::rz(1, phi),  // prepare the unknown state
      Gate::h(4),         Gate::cnot(4, 5),  // shared pair
      Gate::cnot(1, 4),   Gate::h(1),        // Bell-basis rotation
      Gate::cnot(1, 2),   Gate::cnot(4, 3),  // record the outcome
  };
  const std::vector<Gate> corrections = {Gate::cz(2, 5), Gate::cnot(3, 5)};

  TeleportReport report;
  report.theta = theta;
  report.phi = phi;
  report.target_state = prepared_state(theta, phi);

  const QubitNetwork mid = QubitNetwork(5).applied(bell_stage);
  for (int q = 1; q <= 5; ++q)
    report.mid_reduced[q - 1] = reduced_density(mid, InitialState::all_zero(), {q});

  const QubitNetwork done = mid.applied(corrections);
  for (int q = 1; q <= 5; ++q)
    report.final_reduced[q - 1] =
        reduced_density(done, InitialState::all_zero(), {q});
  report.final_pair_45 = reduced_density(done, InitialState::all_zero(), {4, 5});

  std::vector<Gate> whole = bell_stage;
  whole.insert(whole.end(), corrections.begin(), corrections.end());
  report.dual_path_residual = dual_path_residual_of(whole, 5);
  return report;
}

namespace {

std::vector<Gate> dense_code_circuit(int op_index, bool with_decode) {
  // Shared pair in the singlet-type state, prepared from |00>.
  std::vector<Gate> gates = {Gate::h(1), Gate::cnot(1, 2), Gate::y(1)};
  switch (op_index) {
    case 0: break;
    case 1: gates.push_back(Gate::x(1)); break;
    case 2: gates.push_back(Gate::y(1)); break;
    case 3: gates.push_back(Gate::z(1)); break;
    default: throw InvalidInput("dense_code: bits must be 0 or 1");
  }
  if (with_decode) {
    gates.push_back(Gate::cnot(1, 2));
    gates.push_back(Gate::h(1));
  }
  return gates;
}

// Raw record value produced by each encoding operation, and its inverse.
constexpr int kRawOfOp[4] = {3, 2, 0, 1};

}  // namespace

std::array<Mat, 4> dense_code_encoded_states() {
  std::array<Mat, 4> states;
  for (int op = 0; op < 4; ++op) {
    const auto circuit = dense_code_circuit(op, false);
    states[op] = reconstruct_density(QubitNetwork(2).applied(circuit),
                                     InitialState::all_zero());
  }
  return states;
}

std::array<Vec, 4> dense_code_encoded_vectors() {
  std::array<Vec, 4> vectors;
  for (int op = 0; op < 4; ++op) {
    Vec psi = Vec::Zero(4);
    psi(0) = 1.0;
    for (const Gate& g : dense_code_circuit(op, false))
      psi = embed_gate(g, 2) * psi;
    vectors[op] = psi;
  }
  return vectors;
}

DenseCodeReport dense_code_run(int high_bit, int low_bit) {
  if ((high_bit != 0 && high_bit != 1) || (low_bit != 0 && low_bit != 1))
    throw InvalidInput("dense_code: bits must be 0 or 1");
  const int op = (high_bit << 1) | low_bit;

  DenseCodeReport report;
  report.message = {high_bit, low_bit};

  const auto in_flight = dense_code_circuit(op, false);
  report.encoded_state = reconstruct_density(QubitNetwork(2).applied(in_flight),
                                             InitialState::all_zero());

  const auto full = dense_code_circuit(op, true);
  const Mat rho = reconstruct_density(QubitNetwork(2).applied(full),
                                      InitialState::all_zero());
  int best = 0;
  for (int k = 0; k < 4; ++k) {
    report.outcome_distribution[k] = rho(k, k).real();
    if (report.outcome_distribution[k] > report.outcome_distribution[best])
      best = k;
  }
  for (int candidate = 0; candidate < 4; ++candidate)
    if (kRawOfOp[candidate] == best)
      report.decoded = {candidate >> 1, candidate & 1};
  report.dual_path_residual = dual_path_residual_of(full, 2);
  return report;
}

double BellRunReport::correlation() const {
  return joint(0, 0) + joint(1, 1) - joint(0, 1) - joint(1, 0);
}

std::array<double, 2> BellRunReport::near_marginal() const {
  return {joint(0, 0) + joint(0, 1), joint(1, 0) + joint(1, 1)};
}

std::array<double, 2> BellRunReport::far_marginal() const {
  return {joint(0, 0) + joint(1, 0), joint(0, 1) + joint(1, 1)};
}

BellRunReport bell_experiment_run(double theta, double phi) {
  const std::vector<Gate> circuit = {
      Gate::h(2),          Gate::cnot(2, 3),  // the shared pair
      Gate::ry(2, -theta), Gate::cnot(2, 1),  // theta-side measurement
      Gate::ry(3, -phi),   Gate::cnot(3, 4),  // phi-side measurement
  };
  const QubitNetwork net = QubitNetwork(4).applied(circuit);
  const Mat records = reduced_density(net, InitialState::all_zero(), {1, 4});

  BellRunReport report;
  report.theta = theta;
  report.phi = phi;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r4 = 0; r4 < 2; ++r4)
      report.joint(r1, r4) = records(r1 * 2 + r4, r1 * 2 + r4).real();
  report.dual_path_residual = dual_path_residual_of(circuit, 4);
  return report;
}

double chsh_value() {
  const double a = 0.0, a_prime = M_PI / 2.0;
  const double b = M_PI / 4.0, b_prime = 3.0 * M_PI / 4.0;
  const double s = bell_experiment_run(a, b).correlation() -
                   bell_experiment_run(a, b_prime).correlation() +
                   bell_experiment_run(a_prime, b).correlation() +
                   bell_experiment_run(a_prime, b_prime).correlation();
  return s;
}

SwapReport entanglement_swap_run() {
  const std::vector<Gate> preparation = {
      Gate::h(1), Gate::cnot(1, 2),  // pair (1,2)
      Gate::h(3), Gate::cnot(3, 4),  // pair (3,4)
  };
  const std::vector<Gate> measurement = {Gate::cnot(2, 3), Gate::h(2)};

  SwapReport report;
  const QubitNetwork before = QubitNetwork(4).applied(preparation);
  report.pre_pair_14 = reduced_density(before, InitialState::all_zero(), {1, 4});

  const QubitNetwork after = before.applied(measurement);
  const Mat full = reconstruct_density(after, InitialState::all_zero());

  Mat averaged = Mat::Zero(4, 4);
  for (int bits = 0; bits < 4; ++bits) {
    SwapBranch& branch = report.branches[bits];
    branch.record = bits;
    const Mat conditional = project_records(full, 4, {2, 3}, bits);
    branch.probability = conditional.trace().real();
    branch.conditional_pair_14 = conditional / branch.probability;
    averaged += conditional;

    // The conditional state is pure; its dominant eigenvector carries the
    // Schmidt structure of the (1,4) pair.
    const Eigensystem es = hermitian_eigensystem(branch.conditional_pair_14);
    const Vec pure = es.vectors.col(0);
    branch.schmidt_coefficients =
        schmidt_decompose(pure, {2, 2}).coefficients;
    branch.ppt = ppt_verdict(branch.conditional_pair_14, {2, 2});
  }
  report.averaged_pair_14 = averaged;

  std::vector<Gate> whole = preparation;
  whole.insert(whole.end(), measurement.begin(), measurement.end());
  report.dual_path_residual = dual_path_residual_of(whole, 4);
  return report;
}

namespace {

Mat correlated_mixture(int basis_index) {
  // 1/2 (|v0 v0><v0 v0| + |v1 v1><v1 v1|) in the z (0) or x (1) basis.
  Vec v0(2), v1(2);
  if (basis_index == 0) {
    v0 << 1, 0;
    v1 << 0, 1;
  } else {
    const double s = 1.0 / std::sqrt(2.0);
    v0 << s, s;
    v1 << s, -s;
  }
  return 0.5 * (tensor(v0 * v0.adjoint(), v0 * v0.adjoint()) +
                tensor(v1 * v1.adjoint(), v1 * v1.adjoint()));
}

double agreement_probability(const Mat& rho, int basis_index) {
  Vec v0(2), v1(2);
  if (basis_index == 0) {
    v0 << 1, 0;
    v1 << 0, 1;
  } else {
    const double s = 1.0 / std::sqrt(2.0);
    v0 << s, s;
    v1 << s, -s;
  }
  const Mat p0 = v0 * v0.adjoint();
  const Mat p1 = v1 * v1.adjoint();
  const double same = hs_inner(rho, tensor(p0, p0)) + hs_inner(rho, tensor(p1, p1));
  return same;
}

}  // namespace

BitCommitmentReport bc_epr_cheat_run(int committed, int revealed) {
  if ((committed != 0 && committed != 1) || (revealed != 0 && revealed != 1))
    throw InvalidInput("bc_epr_cheat: bits must be 0 or 1");

  BitCommitmentReport report;
  report.committed = committed;
  report.revealed = revealed;
  report.honest_state = correlated_mixture(committed);

  Vec phi_plus(4);
  phi_plus << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  report.cheat_state = phi_plus * phi_plus.adjoint();

  report.honest_pass = agreement_probability(report.honest_state, revealed);
  report.cheat_pass = agreement_probability(report.cheat_state, revealed);

  const std::vector<int> dims{2, 2};
  report.bob_honest_0 = partial_trace(correlated_mixture(0), dims, {1});
  report.bob_honest_1 = partial_trace(correlated_mixture(1), dims, {1});
  report.bob_cheat = partial_trace(report.cheat_state, dims, {1});
  return report;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TypicalSubspaceSummary schumacher_report(const Mat& source_state,
                                         int block_length, double epsilon) {
  if (source_state.rows() != 2 || source_state.cols() != 2)
    throw InvalidInput("schumacher_report: the source must be a qubit state");
  if (block_length < 1 || block_length > 60)
    throw InvalidInput("schumacher_report: block length must be in 1..60");
  if (!(epsilon > 0.0))
    throw InvalidInput("schumacher_report: epsilon must be positive");
  const DensityMatrix checked{source_state};

  const Eigensystem es = hermitian_eigensystem(checked.mat());
  const double hi = std::min(std::max(es.values(0), 0.0), 1.0);
  const double lo = std::max(es.values(1), 0.0);

  TypicalSubspaceSummary summary;
  summary.block_length = block_length;
  summary.eigen_probs = {hi, lo};
  summary.epsilon = epsilon;
  summary.entropy_bits = shannon_entropy(std::vector<double>{hi, 1.0 - hi});

  for (int k = 0; k <= block_length; ++k) {
    // Probability of one particular sequence with k low-eigenvalue slots.
    // Zero-probability sequences are atypical and skipped outright.
    if (lo == 0.0 && k > 0) continue;
    double log_prob = 0.0;
    if (block_length - k > 0) log_prob += (block_length - k) * std::log2(hi);
    if (k > 0) log_prob += k * std::log2(lo);
    const double rate = -log_prob / block_length;
    if (std::abs(rate - summary.entropy_bits) <= epsilon) {
      const std::uint64_t count = binomial(block_length, k);
      summary.typical_dimension += count;
      summary.typical_weight +=
          static_cast<double>(count) * std::exp2(log_prob);
    }
  }
  return summary;
}

CloningCompatibility no_cloning_compatibility(const std::vector<Vec>& states) {
  CloningCompatibility result;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (std::abs(states[i].norm() - 1.0) > 1e-10)
      throw InvalidInput("no_cloning_compatibility: states must be unit norm");
    for (std::size_t j = 0; j < i; ++j)
      if (states[i].size() != states[j].size())
        throw InvalidInput("no_cloning_compatibility: dimension mismatch");
  }
  for (std::size_t i = 0; i < states.size() && result.compatible; ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double overlap = std::abs(Complex(states[i].adjoint() * states[j]));
      if (std::abs(overlap) > 1e-9 && std::abs(overlap - 1.0) > 1e-9) {
        result.compatible = false;
        result.offending_pair = {static_cast<int>(i), static_cast<int>(j)};
        result.overlap = overlap;
        break;
      }
    }
  return result;
}

}  // namespace qnet
