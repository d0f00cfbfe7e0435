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

#include "qnetlab/info.hpp"

#include <algorithm>
#include <cmath>

namespace qnet {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double entropy_unchecked(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) h += plogp(std::max(v, 0.0));
  return h;
}

}  // namespace

void check_distribution(std::span<const double> p) {
  if (p.empty()) throw InvalidInput("distribution must be nonempty");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= -kProbTol) || !std::isfinite(v))
      throw InvalidInput("distribution has a negative or non-finite entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbTol)
    throw InvalidInput("distribution does not sum to 1");
}

double shannon_entropy(std::span<const double> p) {
  check_distribution(p);
  return entropy_unchecked(p);
}

JointDistribution::JointDistribution(Eigen::MatrixXd joint) : p(std::move(joint)) {
  if (p.rows() < 1 || p.cols() < 1)
    throw InvalidInput("joint distribution must be nonempty");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (!(p(i, j) >= -kProbTol) || !std::isfinite(p(i, j)))
        throw InvalidInput("joint distribution has a bad entry");
      sum += p(i, j);
    }
  if (std::abs(sum - 1.0) > kProbTol)
    throw InvalidInput("joint distribution does not sum to 1");
}

std::vector<double> JointDistribution::marginal_x() const {
  std::vector<double> m(p.rows());
  for (Eigen::Index i = 0; i < p.rows(); ++i) m[i] = p.row(i).sum();
  return m;
}

std::vector<double> JointDistribution::marginal_y() const {
  std::vector<double> m(p.cols());
  for (Eigen::Index j = 0; j < p.cols(); ++j) m[j] = p.col(j).sum();
  return m;
}

double joint_entropy(const JointDistribution& j) {
  double h = 0.0;
  for (Eigen::Index r = 0; r < j.p.rows(); ++r)
    for (Eigen::Index c = 0; c < j.p.cols(); ++c)
      h += plogp(std::max(j.p(r, c), 0.0));
  return h;
}

double conditional_entropy(const JointDistribution& j) {
  double h = 0.0;
  for (Eigen::Index c = 0; c < j.p.cols(); ++c) {
    const double py = j.p.col(c).sum();
    if (py <= 0.0) continue;
    double hx_given_y = 0.0;
    for (Eigen::Index r = 0; r < j.p.rows(); ++r)
      hx_given_y += plogp(std::max(j.p(r, c), 0.0) / py);
    h += py * hx_given_y;
  }
  return h;
}

double mutual_information(const JointDistribution& j) {
  const std::vector<double> mx = j.marginal_x();
  return entropy_unchecked(mx) - conditional_entropy(j);
}

double grouping_residual(
    std::span<const double> p, int i, int j,
    const std::function<double(std::span<const double>)>& measure) {
  check_distribution(p);
  const int n = static_cast<int>(p.size());
  if (n < 2) throw InvalidInput("grouping needs at least two outcomes");
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw InvalidInput("merge indices must be distinct and in range");

  const double q1 = p[i];
  const double q2 = p[j];
  const double merged = q1 + q2;

  std::vector<double> grouped;
  grouped.reserve(p.size() - 1);
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) grouped.push_back(p[k]);
  grouped.push_back(merged);

  // A zero-probability group contributes nothing (0 log 0 convention).
  double conditional_term = 0.0;
  if (merged > 0.0) {
    const std::vector<double> pair = {q1 / merged, q2 / merged};
    conditional_term = merged * measure(pair);
  }
  return std::abs(measure(p) - (measure(grouped) + conditional_term));
}

double grouping_residual(std::span<const double> p, int i, int j) {
  return grouping_residual(
      p, i, j, [](std::span<const double> q) { return entropy_unchecked(q); });
}

double dretske_measure(std::span<const double> p_x, int i,
                       std::span<const double> conditional) {
  check_distribution(p_x);
  check_distribution(conditional);
  if (i < 0 || i >= static_cast<int>(p_x.size()))
    throw InvalidInput("dretske_measure: index out of range");
  if (p_x[i] <= 0.0)
    throw InvalidInput("dretske_measure: event has zero probability");
  return -std::log2(p_x[i]) - entropy_unchecked(conditional);
}

double von_neumann_entropy(const Mat& rho) {
  const DensityMatrix checked{rho};
  const Eigensystem es = hermitian_eigensystem(checked.mat());
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double lambda = es.values(k);
    if (lambda < -kPositivityTol)
      throw InvalidInput("von_neumann_entropy: eigenvalue below -1e-9");
    s += plogp(std::max(lambda, 0.0));
  }
  return s;
}

Ensemble::Ensemble(std::vector<Mat> s, std::vector<double> pr)
    : states(std::move(s)), probs(std::move(pr)) {
  if (states.empty() || states.size() != probs.size())
    throw InvalidInput("ensemble needs matching state and probability lists");
  check_distribution(probs);
  for (const Mat& m : states)
    if (m.rows() != states.front().rows() || m.cols() != m.rows())
      throw InvalidInput("ensemble states must share one square dimension");
}

Mat Ensemble::average() const {
  Mat avg = Mat::Zero(states.front().rows(), states.front().cols());
  for (std::size_t k = 0; k < states.size(); ++k)
    avg += probs[k] * states[k];
  return avg;
}

double holevo_chi(const Ensemble& e) {
  double chi = von_neumann_entropy(e.average());
  for (std::size_t k = 0; k < e.states.size(); ++k)
    if (e.probs[k] > 0.0) chi -= e.probs[k] * von_neumann_entropy(e.states[k]);
  return chi;
}

std::vector<double> measurement_distribution(const Mat& rho,
                                             const std::vector<Mat>& projectors) {
  if (projectors.empty())
    throw InvalidInput("measurement_distribution: empty projector set");
  const Eigen::Index dim = rho.rows();
  Mat sum = Mat::Zero(dim, dim);
  for (const Mat& p : projectors) {
    if (p.rows() != dim || p.cols() != dim)
      throw InvalidInput("measurement_distribution: projector dim mismatch");
    if (hs_norm(p * p - p) > 1e-9)
      throw InvalidInput("measurement_distribution: not a projector");
    sum += p;
  }
  if (hs_norm(sum - Mat::Identity(dim, dim)) > 1e-10)
    throw InvalidInput("measurement_distribution: projectors must resolve 1");
  for (std::size_t a = 0; a < projectors.size(); ++a)
    for (std::size_t b = a + 1; b < projectors.size(); ++b)
      if (hs_norm(projectors[a] * projectors[b]) > 1e-9)
        throw InvalidInput("measurement_distribution: projectors overlap");

  std::vector<double> out(projectors.size());
  for (std::size_t k = 0; k < projectors.size(); ++k)
    out[k] = std::max((rho * projectors[k]).trace().real(), 0.0);
  return out;
}

bool majorizes(std::span<const double> p, std::span<const double> q) {
  check_distribution(p);
  check_distribution(q);
  const std::size_t len = std::max(p.size(), q.size());
  std::vector<double> ps(p.begin(), p.end()), qs(q.begin(), q.end());
  ps.resize(len, 0.0);
  qs.resize(len, 0.0);
  std::sort(ps.rbegin(), ps.rend());
  std::sort(qs.rbegin(), qs.rend());
  double sp = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    sp += ps[k];
    sq += qs[k];
    if (sp < sq - 1e-12) return false;
  }
  return true;
}

}  // namespace qnet
