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

#ifndef QNETLAB_ENTANGLEMENT_HPP
#define QNETLAB_ENTANGLEMENT_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnetlab/operators.hpp"

namespace qnet {

// Bipartite separability analysis. Verdicts carry their criterion name and
// never upgrade an inconclusive test: a criterion that is only necessary
// for separability can answer Entangled or Undetermined, never Separable.

enum class Status { Separable, Entangled, Undetermined };

const char* to_string(Status s);

struct Verdict {
  Status status = Status::Undetermined;
  std::string criterion;
  std::optional<double> witness_value;  // e.g. the minimum eigenvalue seen
};

/// Bloch vectors of the two sides plus the 3x3 correlation matrix:
/// a_i = <sigma_i x 1>, b_i = <1 x sigma_i>, C_ij = <sigma_i x sigma_j>.
struct TwoQubitForm {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();

  double sum_c2() const { return c.squaredNorm(); }
};

TwoQubitForm two_qubit_form(const Mat& rho);

/// Inverse of two_qubit_form; throws if the triple does not describe a
/// positive operator.
Mat from_two_qubit_form(const TwoQubitForm& f);

/// Transposes the chosen factor: indices (ik,jl) -> (il,jk) for factor 2.
Mat partial_transpose(const Mat& rho, int subsystem, std::pair<int, int> dims);

/// Conclusive for 2x2 and 2x3 (separable iff the partial transpose is
/// positive); for larger splits a negative partial transpose still means
/// entangled but positivity decides nothing.
Verdict ppt_verdict(const Mat& rho, std::pair<int, int> dims);

/// rho1 x 1 - rho >= 0 and 1 x rho2 - rho >= 0; conclusive on 2x2 and 2x3.
Verdict reduction_verdict(const Mat& rho, std::pair<int, int> dims);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, nonnegative
  Mat basis_a;                       // columns
  Mat basis_b;
  int rank(double tol = 1e-9) const;
};

SchmidtDecomposition schmidt_decompose(const Vec& psi, std::pair<int, int> dims);

/// Entangled when the global spectrum is not majorized by both local
/// spectra; satisfaction of the condition decides nothing.
Verdict majorization_verdict(const Mat& rho, std::pair<int, int> dims);

/// The nested-sphere conditions on the correlation length: separability
/// forces sum c^2 <= 1 and the tighter sum c^2 <= 1 - |a^2 - b^2|.
struct GeometricReport {
  double sum_c2 = 0.0;
  double a2 = 0.0;
  double b2 = 0.0;
  double length_threshold = 1.0;        // sphere enclosing the separable set
  double majorization_threshold = 1.0;  // 1 - |a^2 - b^2|
  Verdict verdict;
};

GeometricReport geometric_report(const TwoQubitForm& f);

/// Proper rotations r1, r2 with r1 C r2^T diagonal; the diagonal may carry
/// a negative entry so that both rotations have determinant +1. The Bloch
/// vectors are rotated along, and sum c^2 is preserved.
struct CorrelationDiagonalization {
  Eigen::Matrix3d r1 = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d r2 = Eigen::Matrix3d::Identity();
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  TwoQubitForm diagonal_form;
};

CorrelationDiagonalization diagonalize_correlation(const TwoQubitForm& f);

// Correlation vectors of the four Bell projectors; every Bell-diagonal
// state is a convex combination of these vertices.
const std::array<Eigen::Vector3d, 4>& bell_vertices();

/// Bell-diagonal state 1/4 (1 + sum_i c_i sigma_i x sigma_i).
Mat bell_diagonal_state(const Eigen::Vector3d& c);

struct TetraMembership {
  bool in_tetrahedron = false;  // 1 + c_B . c >= -tol for all four vertices
  bool in_octohedron = false;   // both c and its y-reflection pass
};

TetraMembership tetra_membership(const Eigen::Vector3d& c, double tol = kPositivityTol);

/// When (b^2 - a^2) + sum c^2 > 1, the partial transpose of rho is an
/// entanglement witness and the 1 x sigma_y rotation of rho is a state it
/// catches, with expectation (1 + a^2 - b^2 - sum c^2)/4 < 0. The
/// nonnegativity on separable states is checked by sampling product states,
/// not proven.
struct WitnessReport {
  Mat witness;
  Mat violating_state;
  double expectation = 0.0;
  double separable_sample_min = 0.0;
  int separable_samples = 0;
  std::string separable_check = "sampled";
};

std::optional<WitnessReport> witness_from_pt(const Mat& rho,
                                             std::uint64_t seed = 20260809,
                                             int samples = 1000);

enum class TripartiteClass { GenuineTripartite, Bipartite, Product };

/// Classification of a three-qubit pure state by which one-versus-rest
/// factorizations of <sigma_i sigma_j sigma_k> hold. The reduced-pair
/// verdicts are advisory output (a GHZ-type state traces to separable
/// pairs, a W-type state to entangled ones).
struct TripartiteReport {
  TripartiteClass cls = TripartiteClass::Product;
  std::optional<std::pair<int, int>> entangled_pair;  // 1-based qubits
  std::array<Verdict, 3> reduced_pair_verdicts;       // pairs (1,2),(1,3),(2,3)
};

TripartiteReport tripartite_classify(const Vec& psi);

/// Random separable mixture sum_k w_k rho1_k x rho2_k on dims.first x
/// dims.second (test input generator).
Mat random_separable_state(std::pair<int, int> dims, int terms,
                           std::uint64_t seed);

}  // namespace qnet

#endif  // QNETLAB_ENTANGLEMENT_HPP
