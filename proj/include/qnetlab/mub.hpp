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

#ifndef QNETLAB_MUB_HPP
#define QNETLAB_MUB_HPP

#include <span>
#include <vector>

#include "qnetlab/operators.hpp"

namespace qnet {

// Complete sets of mutually unbiased bases for dimensions 2 and 3, the
// quadratic concentration measure with its basis-sum identity, and state
// reconstruction from the full measurement table.

/// d+1 orthonormal bases whose cross-basis overlaps squared all equal 1/d.
struct MubSet {
  int d = 0;
  std::vector<std::vector<Vec>> bases;  // (d+1) bases of d unit vectors

  Mat projector(int basis, int outcome) const;
};

/// For d=2 the three Pauli eigenbases; for d=3 the computational basis plus
/// the three Fourier bases with cube-root-of-unity phase quadratics,
/// vector components omega^(s j^2 + t j)/sqrt 3.
MubSet mub_bases(int d);

/// N * sum_i (p_i - 1/n)^2; the quadratic concentration of a distribution.
double bz_measure(std::span<const double> p, double normalization = 1.0);

/// Tr(rho - 1/n)^2, the squared distance from the maximally mixed state.
double itot(const Mat& rho);

/// Outcome table: row j holds the Born distribution in basis j.
struct MubStatistics {
  int d = 0;
  Eigen::MatrixXd table;  // (d+1) x d
};

MubStatistics mub_statistics(const Mat& rho, const MubSet& m);

/// rho = 1/d + sum_ji (p_i^j - 1/d) P_i^j. Statistics that do not come from
/// a state reconstruct to a non-positive operator and are rejected rather
/// than repaired.
Mat reconstruct_from_mub(const MubStatistics& s, const MubSet& m);

}  // namespace qnet

#endif  // QNETLAB_MUB_HPP
