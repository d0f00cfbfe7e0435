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

#ifndef QNETLAB_HEISENBERG_HPP
#define QNETLAB_HEISENBERG_HPP

#include <array>
#include <optional>
#include <vector>

#include "qnetlab/operators.hpp"

namespace qnet {

// Heisenberg-picture simulation of an n-qubit network. Each qubit carries a
// triple of evolving operators (its x, y, z components at time t); gates act
// by conjugation and the density matrix is recovered against a fixed initial
// state. Qubit indices are 1-based; qubit 1 is the leftmost tensor factor.

/// The evolving operator triple attached to one qubit.
struct Descriptor {
  int qubit = 0;
  std::array<Mat, 3> comp;  // x, y, z; each dim 2^n

  int dim() const { return static_cast<int>(comp[0].rows()); }
};

/// Maximum HS distance between matching components.
double descriptor_distance(const Descriptor& a, const Descriptor& b);

struct Gate {
  enum class Kind { H, X, Y, Z, RX, RY, RZ, CNOT, CZ, Unitary };

  Kind kind = Kind::H;
  std::vector<int> targets;  // 1-based, distinct
  double angle = 0.0;        // rotations only
  Mat matrix;                // Kind::Unitary only, dim 2^targets

  static Gate h(int q);
  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate rx(int q, double angle);
  static Gate ry(int q, double angle);
  static Gate rz(int q, double angle);
  static Gate cnot(int control, int target);
  static Gate cz(int a, int b);
  static Gate unitary(Mat u, std::vector<int> targets);

  /// The gate's unitary on its own targets (dim 2^k, first target is the
  /// most significant bit). Rotations are exp(-i angle sigma / 2); the
  /// global-phase lift into the full space is irrelevant under conjugation.
  Mat local_matrix() const;
};

/// Embeds the gate into the full 2^n space, identity on non-targets.
Mat embed_gate(const Gate& g, int n);

/// Fixed reference state the evolved operators are averaged against.
class InitialState {
 public:
  static InitialState all_zero();
  static InitialState state(DensityMatrix rho);

  bool is_all_zero() const { return !rho_.has_value(); }
  /// Tr(rho A); for the all-zero product state this is A(0,0).
  Complex expectation(const Mat& a) const;
  Mat density(int dim) const;

 private:
  InitialState() = default;
  std::optional<DensityMatrix> rho_;
};

class QubitNetwork {
 public:
  /// Time-zero network: qubit i's component m is the bare Pauli word with
  /// index m at slot i. Capped at 8 qubits (3n dense 2^n matrices).
  explicit QubitNetwork(int n);

  int qubit_count() const { return n_; }
  const Descriptor& descriptor(int qubit) const;
  const std::vector<Gate>& history() const { return history_; }

  /// Returns the network after the gate; this network is untouched. Only the
  /// targets' triples change: an operator whose support is disjoint from the
  /// gate commutes with its embedding, so every other descriptor is exactly
  /// invariant. Target components become U(t)^dag G^dag q(0) G U(t),
  /// evaluated against the accumulated circuit unitary so rounding error
  /// stays additive over the history.
  [[nodiscard]] QubitNetwork applied(const Gate& g) const;
  [[nodiscard]] QubitNetwork applied(const std::vector<Gate>& gates) const;

  /// The gate's unitary at the current time, rebuilt from the targets'
  /// current descriptors via the gate's Pauli expansion. Equal to
  /// U(t)^dag embed_gate(g) U(t) because conjugation is multiplicative.
  Mat heisenberg_gate(const Gate& g) const;

  /// Accumulated circuit unitary (later gates multiply on the left).
  const Mat& circuit_unitary() const { return total_; }

 private:
  int n_ = 0;
  Mat total_;
  std::vector<Descriptor> descriptors_;
  std::vector<Gate> history_;
};

/// rho(t) = 2^-n sum over all Pauli words of <prod_i q_i(t)> prod_i q_i(0),
/// evaluated against the initial state.
DensityMatrix reconstruct_density(const QubitNetwork& net,
                                  const InitialState& init);

/// Reduced state of the listed qubits (ascending order in the result): the
/// word sum restricted to identity off the subset, scaled 2^-|subset|.
DensityMatrix reduced_density(const QubitNetwork& net,
                              const InitialState& init,
                              std::vector<int> subset);

/// Independent oracle: conjugates the initial state forward gate by gate,
/// rho -> U rho U^dag.
DensityMatrix schrodinger_reference(const std::vector<Gate>& circuit, int n,
                                    const InitialState& init);

}  // namespace qnet

#endif  // QNETLAB_HEISENBERG_HPP
