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

#ifndef QNETLAB_OPERATORS_HPP
#define QNETLAB_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qnet {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Shared numerical floors. Every separability verdict inherits
// kPositivityTol as its eigenvalue floor.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;

/// Thrown when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_finite(const Mat& a);
bool is_hermitian(const Mat& a, double tol = kHermitianTol);
bool is_unitary(const Mat& a, double tol = 1e-10);

/// Single-qubit Pauli factors; index 0 is the identity, 1..3 are x, y, z.
const Mat& pauli(int m);

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
Mat tensor(const Mat& a, const Mat& b);

/// Trace inner product Tr(ab) on Hermitian operators. The imaginary residue
/// must vanish to within kHermitianTol; it is checked and discarded.
double hs_inner(const Mat& a, const Mat& b);

/// Hilbert-Schmidt norm sqrt(Tr(a^dag a)).
double hs_norm(const Mat& a);

/// Unit-trace positive matrix with validated invariants. The wrapper is the
/// contract: a DensityMatrix always carries trace 1 (to kTraceTol), spectrum
/// >= -kPositivityTol and purity Tr(rho^2) <= 1 + kTraceTol.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);

  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  operator const Mat&() const { return m_; }

 private:
  Mat m_;
};

/// n-fold Pauli index word; entry k in {0,1,2,3} selects the factor on
/// qubit k+1 (qubit 1 is the leftmost, most significant tensor slot).
struct PauliWord {
  int n = 0;
  std::vector<int> indices;

  PauliWord() = default;
  PauliWord(int qubits, std::vector<int> idx);

  /// Decodes flat index j in [0, 4^n) as base-4 digits, qubit 1 first.
  static PauliWord from_flat(int qubits, std::size_t j);
  std::size_t to_flat() const;
};

/// Tensor product of the word's Pauli factors. With `normalized` the result
/// is scaled by 2^(-n/2) so distinct words are orthonormal under hs_inner.
Mat pauli_word_matrix(const PauliWord& w, bool normalized);

/// Real expansion coefficients of a Hermitian operator over the normalized
/// Pauli-word basis, indexed by flat word.
struct PauliExpansion {
  int n = 0;
  std::vector<double> coeffs;  // 4^n entries
};

PauliExpansion hs_expand(const Mat& a);
Mat hs_reconstruct(const PauliExpansion& e);

/// Eigenvalues sorted descending; columns of `vectors` are the matching
/// orthonormal eigenvectors.
struct Eigensystem {
  Eigen::VectorXd values;
  Mat vectors;
};

Eigensystem hermitian_eigensystem(const Mat& a);

/// True iff the minimum eigenvalue is >= -tol.
bool is_positive(const Mat& a, double tol = kPositivityTol);

double min_eigenvalue(const Mat& a);

/// Partial trace. `dims` are the factor dimensions in slot order and `keep`
/// the 0-based slots retained (ascending); all other slots are traced out.
Mat partial_trace(const Mat& rho, const std::vector<int>& dims,
                  const std::vector<int>& keep);

// Seeded generators. Results are pure functions of their arguments; the
// generator is a mt19937_64 consumed in documented order (real then
// imaginary part per entry, column-major).
DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed);
Mat random_unitary(int dim, std::uint64_t seed);
Mat random_hermitian(int dim, std::uint64_t seed);
Vec random_pure_state(int dim, std::uint64_t seed);

}  // namespace qnet

#endif  // QNETLAB_OPERATORS_HPP
