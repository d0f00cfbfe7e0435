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

#ifndef QNETLAB_INFO_HPP
#define QNETLAB_INFO_HPP

#include <functional>
#include <span>
#include <vector>

#include "qnetlab/operators.hpp"

namespace qnet {

// Classical and quantum information measures. All logarithms are base 2
// (bits) and 0 log 0 is 0 by continuous extension.

inline constexpr double kProbTol = 1e-10;

/// Throws unless entries are >= -kProbTol and sum to 1 within kProbTol.
void check_distribution(std::span<const double> p);

double shannon_entropy(std::span<const double> p);

/// p(x_i and y_j) as a |X| x |Y| matrix of nonnegative reals summing to 1.
struct JointDistribution {
  Eigen::MatrixXd p;

  explicit JointDistribution(Eigen::MatrixXd joint);
  std::vector<double> marginal_x() const;
  std::vector<double> marginal_y() const;
};

double joint_entropy(const JointDistribution& j);

/// Average over y of H(X | y); zero-probability columns carry zero weight.
double conditional_entropy(const JointDistribution& j);

/// H(X) - H(X|Y); symmetric and nonnegative.
double mutual_information(const JointDistribution& j);

/// |H(p) - [H(p with i,j merged) + p_merged H(pair | merged)]| for any
/// uncertainty measure; the Shannon measure satisfies the identity to
/// machine precision, which is exactly what the residual exposes.
double grouping_residual(
    std::span<const double> p, int i, int j,
    const std::function<double(std::span<const double>)>& measure);
double grouping_residual(std::span<const double> p, int i, int j);

/// -log2 p(x_i) - H(conditional): surprise information of the event minus
/// the residual uncertainty of the conditional distribution.
double dretske_measure(std::span<const double> p_x, int i,
                       std::span<const double> conditional);

/// Shannon entropy of the spectrum. Eigenvalues in [-1e-9, 0) are clipped
/// to zero; anything lower is rejected.
double von_neumann_entropy(const Mat& rho);

struct Ensemble {
  std::vector<Mat> states;
  std::vector<double> probs;

  Ensemble(std::vector<Mat> s, std::vector<double> pr);
  Mat average() const;
};

/// S(sum p_i rho_i) - sum p_i S(rho_i).
double holevo_chi(const Ensemble& e);

/// Born probabilities p_i = Tr(rho P_i) for a complete orthogonal projector
/// set (sums to the identity within 1e-10).
std::vector<double> measurement_distribution(const Mat& rho,
                                             const std::vector<Mat>& projectors);

/// True iff p majorizes q: every partial sum of p sorted descending is >=
/// the matching partial sum of q, within 1e-12. Shorter vectors are padded
/// with zeros.
bool majorizes(std::span<const double> p, std::span<const double> q);

}  // namespace qnet

#endif  // QNETLAB_INFO_HPP
