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

#include "qnetlab/mub.hpp"

#include <cmath>

#include "qnetlab/info.hpp"

namespace qnet {

Mat MubSet::projector(int basis, int outcome) const {
  const Vec& v = bases.at(basis).at(outcome);
  return v * v.adjoint();
}

MubSet mub_bases(int d) {
  MubSet m;
  m.d = d;
  if (d == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<Vec> z(2, Vec(2)), x(2, Vec(2)), y(2, Vec(2));
    z[0] << 1, 0;
    z[1] << 0, 1;
    x[0] << s, s;
    x[1] << s, -s;
    y[0] << s, i * s;
    y[1] << s, -i * s;
    m.bases = {z, x, y};
  } else if (d == 3) {
    const double s = 1.0 / std::sqrt(3.0);
    const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    std::vector<Vec> comp(3, Vec(3));
    for (int t = 0; t < 3; ++t) {
      comp[t].setZero();
      comp[t](t) = 1.0;
    }
    m.bases.push_back(comp);
    for (int phase = 0; phase < 3; ++phase) {
      std::vector<Vec> basis(3, Vec(3));
      for (int t = 0; t < 3; ++t)
        for (int j = 0; j < 3; ++j)
          basis[t](j) = s * std::pow(omega, phase * j * j + t * j);
      m.bases.push_back(basis);
    }
  } else {
    throw InvalidInput("mub_bases: only dimensions 2 and 3 are supported");
  }
  return m;
}

double bz_measure(std::span<const double> p, double normalization) {
  check_distribution(p);
  const double uniform = 1.0 / static_cast<double>(p.size());
  double sum = 0.0;
  for (double v : p) sum += (v - uniform) * (v - uniform);
  return normalization * sum;
}

double itot(const Mat& rho) {
  const DensityMatrix checked{rho};
  const Eigen::Index d = rho.rows();
  const Mat centered = checked.mat() - Mat::Identity(d, d) / double(d);
  return (centered * centered).trace().real();
}

MubStatistics mub_statistics(const Mat& rho, const MubSet& m) {
  if (rho.rows() != m.d || rho.cols() != m.d)
    throw InvalidInput("mub_statistics: state and basis dimensions differ");
  const DensityMatrix checked{rho};
  MubStatistics s;
  s.d = m.d;
  s.table.resize(static_cast<Eigen::Index>(m.bases.size()), m.d);
  for (std::size_t j = 0; j < m.bases.size(); ++j) {
    std::vector<Mat> projectors;
    projectors.reserve(m.d);
    for (int i = 0; i < m.d; ++i) projectors.push_back(m.projector(j, i));
    const auto row = measurement_distribution(checked.mat(), projectors);
    for (int i = 0; i < m.d; ++i) s.table(j, i) = row[i];
  }
  return s;
}

Mat reconstruct_from_mub(const MubStatistics& s, const MubSet& m) {
  if (s.d != m.d) throw InvalidInput("reconstruct_from_mub: dim mismatch");
  if (s.table.rows() != static_cast<Eigen::Index>(m.bases.size()) ||
      s.table.cols() != m.d)
    throw InvalidInput("reconstruct_from_mub: table has the wrong shape");
  const double uniform = 1.0 / m.d;
  for (Eigen::Index j = 0; j < s.table.rows(); ++j) {
    std::vector<double> row(s.table.cols());
    for (Eigen::Index i = 0; i < s.table.cols(); ++i) row[i] = s.table(j, i);
    check_distribution(row);
  }

  Mat rho = Mat::Identity(m.d, m.d) * uniform;
  for (std::size_t j = 0; j < m.bases.size(); ++j)
    for (int i = 0; i < m.d; ++i)
      rho += (s.table(j, i) - uniform) * m.projector(static_cast<int>(j), i);

  rho = ((rho + rho.adjoint()) / 2.0).eval();
  if (!is_positive(rho, kPositivityTol))
    throw InvalidInput(
        "reconstruct_from_mub: statistics are inconsistent with any state");
  return rho;
}

}  // namespace qnet
