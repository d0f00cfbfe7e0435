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

#ifndef QNETLAB_PROTOCOLS_HPP
#define QNETLAB_PROTOCOLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qnetlab/entanglement.hpp"
#include "qnetlab/heisenberg.hpp"

namespace qnet {

// Entanglement-assisted protocols executed on the Heisenberg engine.
// Measurements are unitary outcome transcriptions into record qubits;
// branch-conditional states are obtained by projecting records at analysis
// time. Every report keeps the underlying states so its quantities can be
// recomputed rather than quoted.

/// Five-qubit teleportation: qubit 1 carries the unknown state, 2 and 3 the
/// measurement records, (4,5) the shared pair; Bob corrects with a
/// controlled-Z from 2 and a controlled-X from 3.
struct TeleportReport {
  double theta = 0.0;
  double phi = 0.0;
  Vec target_state;                     // the prepared single-qubit state
  std::array<Mat, 5> mid_reduced;      // after the Bell step, one per qubit
  std::array<Mat, 5> final_reduced;    // after the corrections
  Mat final_pair_45;                    // resource pair after the protocol
  double dual_path_residual = 0.0;      // Heisenberg vs Schrodinger

  double fidelity() const;              // <chi| rho_5 |chi>
  const Mat& output_state() const { return final_reduced[4]; }
  const Mat& sender_residual_state() const { return final_reduced[0]; }
};

TeleportReport teleport_run(double theta, double phi);

/// Two-bit dense coding over a shared singlet-type pair: the encoder picks
/// one of {1, x, y, z} on qubit 1; the decoder Bell-measures with CNOT+H.
struct DenseCodeReport {
  std::pair<int, int> message;
  std::pair<int, int> decoded;
  std::array<double, 4> outcome_distribution;  // over raw record values
  Mat encoded_state;                           // the two-qubit state in flight
  double dual_path_residual = 0.0;

  bool success() const { return decoded == message; }
};

DenseCodeReport dense_code_run(int high_bit, int low_bit);

/// All four encoded states of the dense-coding protocol, for orthogonality
/// checks; the vector form keeps overlaps at the rounding floor.
std::array<Mat, 4> dense_code_encoded_states();
std::array<Vec, 4> dense_code_encoded_vectors();

/// Bell pairs (1,2) and (3,4); a Bell measurement on (2,3) leaves (1,4)
/// maximally entangled conditional on the outcome branch.
struct SwapBranch {
  int record = 0;  // outcome bits of qubits (2,3)
  double probability = 0.0;
  Mat conditional_pair_14;
  std::vector<double> schmidt_coefficients;
  Verdict ppt;
};

struct SwapReport {
  Mat pre_pair_14;         // before the measurement: a product
  Mat averaged_pair_14;    // outcome-averaged: separable
  std::array<SwapBranch, 4> branches;
  double dual_path_residual = 0.0;
};

SwapReport entanglement_swap_run();

/// Four-qubit Bell experiment: pair on (2,3), measurement at angle theta
/// recorded on 1, at angle phi recorded on 4 (angles in the z-x plane).
struct BellRunReport {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::Matrix2d joint;       // records (1,4)
  double dual_path_residual = 0.0;

  double correlation() const;  // p(same) - p(different)
  std::array<double, 2> near_marginal() const;  // record 1
  std::array<double, 2> far_marginal() const;   // record 4
};

BellRunReport bell_experiment_run(double theta, double phi);

/// CHSH combination at the canonical maximizing angles
/// a=0, a'=pi/2, b=pi/4, b'=3pi/4; the value is 2 sqrt 2.
double chsh_value();

/// Bit commitment with classically correlated mixtures (z for 0, x for 1)
/// and the entangled cheat that defers the basis choice to revelation.
struct BitCommitmentReport {
  int committed = 0;
  int revealed = 0;
  Mat honest_state;           // the mixture for the committed bit
  Mat cheat_state;            // the shared entangled pair
  double honest_pass = 0.0;   // probability Bob's comparison succeeds
  double cheat_pass = 0.0;
  Mat bob_honest_0;           // Bob's reduced state per preparation
  Mat bob_honest_1;
  Mat bob_cheat;
};

BitCommitmentReport bc_epr_cheat_run(int committed, int revealed);

/// Block-coding account of a qubit source: counts eigenvalue sequences whose
/// empirical entropy rate sits within epsilon of the source entropy.
/// Combinatorial only; no 2^N-dimensional operators are formed.
struct TypicalSubspaceSummary {
  int block_length = 0;
  std::array<double, 2> eigen_probs{};  // descending
  double entropy_bits = 0.0;
  double epsilon = 0.0;
  std::uint64_t typical_dimension = 0;
  double typical_weight = 0.0;
};

TypicalSubspaceSummary schumacher_report(const Mat& source_state, int block_length,
                                         double epsilon);

/// A set of states is clonable by one device only if each pair is identical
/// or orthogonal; reports the first offending pair otherwise.
struct CloningCompatibility {
  bool compatible = true;
  std::optional<std::pair<int, int>> offending_pair;
  double overlap = 0.0;
};

CloningCompatibility no_cloning_compatibility(const std::vector<Vec>& states);

}  // namespace qnet

#endif  // QNETLAB_PROTOCOLS_HPP
