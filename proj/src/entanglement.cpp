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

#include "qnetlab/entanglement.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "qnetlab/info.hpp"

namespace qnet {

namespace {

void check_split(const Mat& rho, std::pair<int, int> dims) {
  if (dims.first < 2 || dims.second < 2)
    throw InvalidInput("bipartite split needs factors of dimension >= 2");
  if (rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dims.first) * dims.second)
    throw InvalidInput("state dimension does not match the split");
}

bool split_is_conclusive(std::pair<int, int> dims) {
  return dims.first * dims.second <= 6;
}

std::vector<double> clipped_spectrum(const Mat& a) {
  const Eigensystem es = hermitian_eigensystem(a);
  std::vector<double> out(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    out[k] = std::max(es.values(k), 0.0);
  return out;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Separable: return "Separable";
    case Status::Entangled: return "Entangled";
    case Status::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

TwoQubitForm two_qubit_form(const Mat& rho) {
  const DensityMatrix checked{rho};
  if (checked.dim() != 4)
    throw InvalidInput("two_qubit_form: state must be two qubits");
  const Mat id = Mat::Identity(2, 2);
  TwoQubitForm f;
  for (int i = 1; i <= 3; ++i) {
    f.a(i - 1) = hs_inner(checked.mat(), tensor(pauli(i), id));
    f.b(i - 1) = hs_inner(checked.mat(), tensor(id, pauli(i)));
    for (int j = 1; j <= 3; ++j)
      f.c(i - 1, j - 1) = hs_inner(checked.mat(), tensor(pauli(i), pauli(j)));
  }
  return f;
}

Mat from_two_qubit_form(const TwoQubitForm& f) {
  const Mat id = Mat::Identity(2, 2);
  Mat rho = tensor(id, id);
  for (int i = 1; i <= 3; ++i) {
    rho += f.a(i - 1) * tensor(pauli(i), id);
    rho += f.b(i - 1) * tensor(id, pauli(i));
    for (int j = 1; j <= 3; ++j)
      rho += f.c(i - 1, j - 1) * tensor(pauli(i), pauli(j));
  }
  rho /= 4.0;
  if (!is_positive(rho, kPositivityTol))
    throw InvalidInput("from_two_qubit_form: the triple is not a state");
  return rho;
}

Mat partial_transpose(const Mat& rho, int subsystem, std::pair<int, int> dims) {
  check_split(rho, dims);
  if (subsystem != 1 && subsystem != 2)
    throw InvalidInput("partial_transpose: subsystem must be 1 or 2");
  const int da = dims.first, db = dims.second;
  Mat out(rho.rows(), rho.cols());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) {
          if (subsystem == 2)
            out(i * db + k, j * db + l) = rho(i * db + l, j * db + k);
          else
            out(i * db + k, j * db + l) = rho(j * db + k, i * db + l);
        }
  return out;
}

Verdict ppt_verdict(const Mat& rho, std::pair<int, int> dims) {
  const DensityMatrix checked{rho};
  check_split(checked.mat(), dims);
  const double lowest =
      min_eigenvalue(partial_transpose(checked.mat(), 2, dims));
  Verdict v;
  v.criterion = "ppt";
  v.witness_value = lowest;
  if (lowest < -kPositivityTol)
    v.status = Status::Entangled;
  else
    v.status = split_is_conclusive(dims) ? Status::Separable
                                         : Status::Undetermined;
  return v;
}

Verdict reduction_verdict(const Mat& rho, std::pair<int, int> dims) {
  const DensityMatrix checked{rho};
  check_split(checked.mat(), dims);
  if (!split_is_conclusive(dims))
    throw InvalidInput("reduction_verdict: only 2x2 and 2x3 are supported");
  const std::vector<int> factor_dims{dims.first, dims.second};
  const Mat rho1 = partial_trace(checked.mat(), factor_dims, {0});
  const Mat rho2 = partial_trace(checked.mat(), factor_dims, {1});
  const Mat first = tensor(rho1, Mat::Identity(dims.second, dims.second)) -
                    checked.mat();
  const Mat second = tensor(Mat::Identity(dims.first, dims.first), rho2) -
                     checked.mat();
  const double lowest = std::min(min_eigenvalue(first), min_eigenvalue(second));
  Verdict v;
  v.criterion = "reduction";
  v.witness_value = lowest;
  v.status = lowest < -kPositivityTol ? Status::Entangled : Status::Separable;
  return v;
}

int SchmidtDecomposition::rank(double tol) const {
  int r = 0;
  for (double c : coefficients)
    if (c > tol) ++r;
  return r;
}

SchmidtDecomposition schmidt_decompose(const Vec& psi,
                                       std::pair<int, int> dims) {
  const int da = dims.first, db = dims.second;
  if (psi.size() != static_cast<Eigen::Index>(da) * db)
    throw InvalidInput("schmidt_decompose: vector does not match the split");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw InvalidInput("schmidt_decompose: vector is not unit norm");

  Mat amplitudes(da, db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k) amplitudes(i, k) = psi(i * db + k);

  Eigen::JacobiSVD<Mat> svd(amplitudes,
                            Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  const Eigen::Index terms = svd.singularValues().size();
  out.coefficients.assign(svd.singularValues().data(),
                          svd.singularValues().data() + terms);
  out.basis_a = svd.matrixU();
  out.basis_b = svd.matrixV().conjugate();
  return out;
}

Verdict majorization_verdict(const Mat& rho, std::pair<int, int> dims) {
  const DensityMatrix checked{rho};
  check_split(checked.mat(), dims);
  const std::vector<int> factor_dims{dims.first, dims.second};
  const auto global = clipped_spectrum(checked.mat());
  const auto local1 =
      clipped_spectrum(partial_trace(checked.mat(), factor_dims, {0}));
  const auto local2 =
      clipped_spectrum(partial_trace(checked.mat(), factor_dims, {1}));
  Verdict v;
  v.criterion = "majorization";
  const bool disordered_globally =
      majorizes(local1, global) && majorizes(local2, global);
  v.status = disordered_globally ? Status::Undetermined : Status::Entangled;
  return v;
}

GeometricReport geometric_report(const TwoQubitForm& f) {
  GeometricReport r;
  r.sum_c2 = f.sum_c2();
  r.a2 = f.a.squaredNorm();
  r.b2 = f.b.squaredNorm();
  r.length_threshold = 1.0;
  r.majorization_threshold = 1.0 - std::abs(r.a2 - r.b2);
  r.verdict.criterion = "geometric";
  r.verdict.witness_value = r.sum_c2;
  const bool beyond_length = r.sum_c2 > r.length_threshold + kPositivityTol;
  const bool beyond_majorization =
      r.sum_c2 > r.majorization_threshold + kPositivityTol;
  r.verdict.status = (beyond_length || beyond_majorization)
                         ? Status::Entangled
                         : Status::Undetermined;
  return r;
}

CorrelationDiagonalization diagonalize_correlation(const TwoQubitForm& f) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      f.c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  Eigen::Vector3d sigma = svd.singularValues();
  // Absorb reflections into the last axis so both rotations are proper; the
  // price is a possibly negative last diagonal entry.
  if (u.determinant() < 0) {
    u.col(2) *= -1.0;
    sigma(2) *= -1.0;
  }
  if (v.determinant() < 0) {
    v.col(2) *= -1.0;
    sigma(2) *= -1.0;
  }

  CorrelationDiagonalization out;
  out.r1 = u.transpose();
  out.r2 = v.transpose();
  out.c = sigma;
  out.diagonal_form.a = out.r1 * f.a;
  out.diagonal_form.b = out.r2 * f.b;
  out.diagonal_form.c = out.r1 * f.c * out.r2.transpose();
  return out;
}

const std::array<Eigen::Vector3d, 4>& bell_vertices() {
  static const std::array<Eigen::Vector3d, 4> vertices = {
      Eigen::Vector3d(1, -1, 1),    // phi+
      Eigen::Vector3d(-1, 1, 1),    // phi-
      Eigen::Vector3d(1, 1, -1),    // psi+
      Eigen::Vector3d(-1, -1, -1),  // psi-
  };
  return vertices;
}

Mat bell_diagonal_state(const Eigen::Vector3d& c) {
  Mat rho = Mat::Identity(4, 4);
  for (int i = 1; i <= 3; ++i)
    rho += c(i - 1) * tensor(pauli(i), pauli(i));
  return rho / 4.0;
}

TetraMembership tetra_membership(const Eigen::Vector3d& c, double tol) {
  auto inside = [&](const Eigen::Vector3d& point) {
    for (const Eigen::Vector3d& vertex : bell_vertices())
      if (1.0 + vertex.dot(point) < -tol) return false;
    return true;
  };
  TetraMembership m;
  m.in_tetrahedron = inside(c);
  const Eigen::Vector3d reflected(c(0), -c(1), c(2));
  m.in_octohedron = m.in_tetrahedron && inside(reflected);
  return m;
}

std::optional<WitnessReport> witness_from_pt(const Mat& rho,
                                             std::uint64_t seed, int samples) {
  const TwoQubitForm f = two_qubit_form(rho);
  const double a2 = f.a.squaredNorm(), b2 = f.b.squaredNorm();
  if ((b2 - a2) + f.sum_c2() <= 1.0 + 1e-12) return std::nullopt;

  WitnessReport report;
  report.witness = partial_transpose(rho, 2, {2, 2});
  const Mat rotation = tensor(Mat::Identity(2, 2), pauli(2));
  report.violating_state = rotation * rho * rotation.adjoint();
  report.expectation = hs_inner(report.witness, report.violating_state);

  // Bookkeeping check: the expectation has the closed form
  // (1 + a^2 - b^2 - sum c^2)/4 and must come out negative.
  const double closed_form = (1.0 + a2 - b2 - f.sum_c2()) / 4.0;
  if (std::abs(report.expectation - closed_form) > 1e-10 ||
      report.expectation >= 0.0)
    throw std::runtime_error("witness_from_pt: expectation check failed");

  report.separable_samples = samples;
  double lowest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const Mat left = random_density_matrix(2, 1, seed + 2 * k).mat();
    const Mat right = random_density_matrix(2, 1, seed + 2 * k + 1).mat();
    lowest = std::min(lowest, hs_inner(report.witness, tensor(left, right)));
  }
  report.separable_sample_min = lowest;
  return report;
}

namespace {

// <sigma_a x sigma_b x sigma_c> for a pure three-qubit state.
double triple_expectation(const Vec& psi, int a, int b, int c) {
  const Mat word = tensor(tensor(pauli(a), pauli(b)), pauli(c));
  const Complex value = psi.adjoint() * word * psi;
  return value.real();
}

}  // namespace

TripartiteReport tripartite_classify(const Vec& psi) {
  if (psi.size() != 8)
    throw InvalidInput("tripartite_classify: need a three-qubit vector");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw InvalidInput("tripartite_classify: vector is not unit norm");
  constexpr double tol = 1e-9;

  // factored[s] is true when system s+1 splits off: every word expectation
  // equals the product of its marginal on s+1 and the rest.
  std::array<bool, 3> factored = {true, true, true};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const double whole = triple_expectation(psi, a, b, c);
        if (a != 0 &&
            std::abs(whole - triple_expectation(psi, a, 0, 0) *
                                 triple_expectation(psi, 0, b, c)) > tol)
          factored[0] = false;
        if (b != 0 &&
            std::abs(whole - triple_expectation(psi, 0, b, 0) *
                                 triple_expectation(psi, a, 0, c)) > tol)
          factored[1] = false;
        if (c != 0 &&
            std::abs(whole - triple_expectation(psi, 0, 0, c) *
                                 triple_expectation(psi, a, b, 0)) > tol)
          factored[2] = false;
      }

  TripartiteReport report;
  const int factored_count =
      int(factored[0]) + int(factored[1]) + int(factored[2]);
  if (factored_count == 0) {
    report.cls = TripartiteClass::GenuineTripartite;
  } else if (factored_count == 1) {
    report.cls = TripartiteClass::Bipartite;
    if (factored[0]) report.entangled_pair = {2, 3};
    if (factored[1]) report.entangled_pair = {1, 3};
    if (factored[2]) report.entangled_pair = {1, 2};
  } else {
    report.cls = TripartiteClass::Product;
  }

  const Mat rho = psi * psi.adjoint();
  const std::vector<int> dims{2, 2, 2};
  const std::array<std::vector<int>, 3> pairs = {
      std::vector<int>{0, 1}, std::vector<int>{0, 2}, std::vector<int>{1, 2}};
  for (int k = 0; k < 3; ++k)
    report.reduced_pair_verdicts[k] =
        ppt_verdict(partial_trace(rho, dims, pairs[k]), {2, 2});
  return report;
}

Mat random_separable_state(std::pair<int, int> dims, int terms,
                           std::uint64_t seed) {
  if (terms < 1) throw InvalidInput("random_separable_state: terms >= 1");
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<int> rank_a(1, dims.first);
  std::uniform_int_distribution<int> rank_b(1, dims.second);
  std::vector<double> weights(terms);
  double sum = 0.0;
  for (double& w : weights) sum += (w = expo(gen));
  Mat rho = Mat::Zero(dims.first * dims.second, dims.first * dims.second);
  for (int k = 0; k < terms; ++k) {
    const Mat left =
        random_density_matrix(dims.first, rank_a(gen), gen()).mat();
    const Mat right =
        random_density_matrix(dims.second, rank_b(gen), gen()).mat();
    rho += (weights[k] / sum) * tensor(left, right);
  }
  return rho;
}

}  // namespace qnet
