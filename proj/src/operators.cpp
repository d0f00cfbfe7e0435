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

#include "qnetlab/operators.hpp"

#include <cmath>
#include <random>

namespace qnet {

namespace {

int log2_exact(int dim) {
  int n = 0;
  int d = dim;
  while (d > 1) {
    if (d % 2 != 0) return -1;
    d /= 2;
    ++n;
  }
  return dim >= 1 ? n : -1;
}

std::mt19937_64 make_gen(std::uint64_t seed) { return std::mt19937_64(seed); }

// Standard-normal entries, real then imaginary, filled column-major.
Mat gaussian_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

bool is_finite(const Mat& a) { return a.allFinite(); }

bool is_hermitian(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  Mat residual = a.adjoint() * a - Mat::Identity(a.rows(), a.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

const Mat& pauli(int m) {
  static const Mat table[4] = {
      (Mat(2, 2) << 1, 0, 0, 1).finished(),
      (Mat(2, 2) << 0, 1, 1, 0).finished(),
      (Mat(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Mat(2, 2) << 1, 0, 0, -1).finished(),
  };
  if (m < 0 || m > 3) throw InvalidInput("pauli index must be in 0..3");
  return table[m];
}

Mat tensor(const Mat& a, const Mat& b) {
  if (!is_finite(a) || !is_finite(b))
    throw InvalidInput("tensor: non-finite input");
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput("hs_inner: dimension mismatch");
  const Complex t = (a * b).trace();
  if (std::abs(t.imag()) > kHermitianTol * std::max(1.0, std::abs(t.real())))
    throw InvalidInput("hs_inner: trace has a non-negligible imaginary part");
  return t.real();
}

double hs_norm(const Mat& a) {
  return std::sqrt((a.adjoint() * a).trace().real());
}

DensityMatrix::DensityMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw InvalidInput("density matrix must be square and nonempty");
  if (!is_finite(m_)) throw InvalidInput("density matrix has non-finite entries");
  if (!is_hermitian(m_, 1e-10))
    throw InvalidInput("density matrix is not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol ||
      std::abs(m_.trace().imag()) > kTraceTol)
    throw InvalidInput("density matrix trace differs from 1");
  if (!is_positive(m_, kPositivityTol))
    throw InvalidInput("density matrix has an eigenvalue below -1e-9");
  const double purity = (m_ * m_).trace().real();
  if (purity > 1.0 + kTraceTol)
    throw InvalidInput("density matrix purity exceeds 1");
}

PauliWord::PauliWord(int qubits, std::vector<int> idx)
    : n(qubits), indices(std::move(idx)) {
  if (n < 1) throw InvalidInput("PauliWord: need at least one qubit");
  if (static_cast<int>(indices.size()) != n)
    throw InvalidInput("PauliWord: index count does not match qubit count");
  for (int m : indices)
    if (m < 0 || m > 3) throw InvalidInput("PauliWord: index out of range");
}

PauliWord PauliWord::from_flat(int qubits, std::size_t j) {
  std::vector<int> idx(qubits);
  for (int k = qubits - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(j % 4);
    j /= 4;
  }
  if (j != 0) throw InvalidInput("PauliWord: flat index out of range");
  return PauliWord(qubits, std::move(idx));
}

std::size_t PauliWord::to_flat() const {
  std::size_t j = 0;
  for (int m : indices) j = j * 4 + static_cast<std::size_t>(m);
  return j;
}

Mat pauli_word_matrix(const PauliWord& w, bool normalized) {
  Mat out = pauli(w.indices[0]);
  for (int k = 1; k < w.n; ++k) out = tensor(out, pauli(w.indices[k]));
  if (normalized) out *= std::pow(2.0, -0.5 * w.n);
  return out;
}

PauliExpansion hs_expand(const Mat& a) {
  const int n = log2_exact(static_cast<int>(a.rows()));
  if (n < 0 || a.rows() != a.cols())
    throw InvalidInput("hs_expand: dimension is not a power of two");
  if (!is_hermitian(a, 1e-10)) throw InvalidInput("hs_expand: not Hermitian");
  const std::size_t count = std::size_t(1) << (2 * n);
  PauliExpansion e{n, std::vector<double>(count)};
  for (std::size_t j = 0; j < count; ++j) {
    const Mat basis = pauli_word_matrix(PauliWord::from_flat(n, j), true);
    e.coeffs[j] = hs_inner(a, basis);
  }
  return e;
}

Mat hs_reconstruct(const PauliExpansion& e) {
  const int dim = 1 << e.n;
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
    if (e.coeffs[j] == 0.0) continue;
    out += e.coeffs[j] * pauli_word_matrix(PauliWord::from_flat(e.n, j), true);
  }
  return out;
}

Eigensystem hermitian_eigensystem(const Mat& a) {
  if (!is_hermitian(a, 1e-9))
    throw InvalidInput("hermitian_eigensystem: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: solver failed");
  const Eigen::Index d = a.rows();
  Eigensystem out;
  out.values.resize(d);
  out.vectors.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.values(k) = solver.eigenvalues()(d - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(d - 1 - k);
  }
  return out;
}

bool is_positive(const Mat& a, double tol) {
  return min_eigenvalue(a) >= -tol;
}

double min_eigenvalue(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("min_eigenvalue: solver failed");
  return solver.eigenvalues().minCoeff();
}

Mat partial_trace(const Mat& rho, const std::vector<int>& dims,
                  const std::vector<int>& keep) {
  const int slots = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidInput("partial_trace: bad factor dimension");
    total *= d;
  }
  if (rho.rows() != total || rho.cols() != total)
    throw InvalidInput("partial_trace: dims do not match matrix size");
  std::vector<bool> kept(slots, false);
  for (int s : keep) {
    if (s < 0 || s >= slots) throw InvalidInput("partial_trace: bad slot");
    if (kept[s]) throw InvalidInput("partial_trace: duplicate slot");
    kept[s] = true;
  }
  long kept_dim = 1, traced_dim = 1;
  for (int s = 0; s < slots; ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];

  // Row-major strides over the slot digit expansion of a full index.
  std::vector<long> stride(slots);
  long acc = 1;
  for (int s = slots - 1; s >= 0; --s) {
    stride[s] = acc;
    acc *= dims[s];
  }

  auto full_index = [&](long kept_digits, long traced_digits) {
    long idx = 0;
    long kd = kept_digits, td = traced_digits;
    for (int s = slots - 1; s >= 0; --s) {
      if (kept[s]) {
        idx += (kd % dims[s]) * stride[s];
        kd /= dims[s];
      } else {
        idx += (td % dims[s]) * stride[s];
        td /= dims[s];
      }
    }
    return idx;
  };

  Mat out = Mat::Zero(kept_dim, kept_dim);
  for (long r = 0; r < kept_dim; ++r)
    for (long c = 0; c < kept_dim; ++c) {
      Complex sum = 0.0;
      for (long t = 0; t < traced_dim; ++t)
        sum += rho(full_index(r, t), full_index(c, t));
      out(r, c) = sum;
    }
  return out;
}

DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed) {
  if (dim < 1) throw InvalidInput("random_density_matrix: dim must be >= 1");
  if (rank < 1 || rank > dim)
    throw InvalidInput("random_density_matrix: rank must be in 1..dim");
  auto gen = make_gen(seed);
  const Mat g = gaussian_matrix(dim, rank, gen);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = ((rho + rho.adjoint()) / 2.0).eval();  // scrub rounding asymmetry
  return DensityMatrix(std::move(rho));
}

Mat random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw InvalidInput("random_unitary: dim must be >= 1");
  auto gen = make_gen(seed);
  const Mat g = gaussian_matrix(dim, dim, gen);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the factorization is unique (Haar measure).
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

Mat random_hermitian(int dim, std::uint64_t seed) {
  auto gen = make_gen(seed);
  const Mat g = gaussian_matrix(dim, dim, gen);
  return (g + g.adjoint()) / 2.0;
}

Vec random_pure_state(int dim, std::uint64_t seed) {
  auto gen = make_gen(seed);
  const Mat g = gaussian_matrix(dim, 1, gen);
  Vec v = g.col(0);
  return v / v.norm();
}

}  // namespace qnet
