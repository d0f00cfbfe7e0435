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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qnetlab/operators.hpp"

using namespace qnet;

namespace {

Mat singlet_projector() {
  Vec psi(4);
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  return psi * psi.adjoint();
}

Mat basis_projector(int dim, int k) {
  Mat p = Mat::Zero(dim, dim);
  p(k, k) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("tensor product reproduces hand-computed Kronecker blocks") {
  const Mat i2 = Mat::Identity(2, 2);
  CHECK((tensor(i2, i2) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const Mat zz = tensor(pauli(3), pauli(3));
  Mat expected = Mat::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = -1;
  expected(2, 2) = -1;
  expected(3, 3) = 1;
  CHECK((zz - expected).cwiseAbs().maxCoeff() == 0.0);

  // sigma_x (x) I has identity blocks on the anti-diagonal.
  const Mat xi = tensor(pauli(1), i2);
  CHECK((xi.block(0, 2, 2, 2) - i2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((xi.block(2, 0, 2, 2) - i2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(xi.block(0, 0, 2, 2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(xi.block(2, 2, 2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hs_inner on Pauli factors and projectors") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(hs_inner(pauli(i), pauli(j)) == doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-14));
  CHECK(hs_inner(pauli(0), pauli(0)) == doctest::Approx(2.0));
  const Mat p = singlet_projector();
  CHECK(hs_inner(p, p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(hs_inner(pauli(1), Mat::Identity(4, 4)), InvalidInput);
}

TEST_CASE("pauli_word_matrix normalization and placement") {
  const Mat gx = pauli_word_matrix(PauliWord(1, {1}), true);
  CHECK((gx - pauli(1) / std::sqrt(2.0)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(hs_inner(gx, gx) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK((pauli_word_matrix(PauliWord(2, {0, 0}), false) - Mat::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const Mat zz = pauli_word_matrix(PauliWord(2, {3, 3}), false);
  CHECK(zz(0, 0) == Complex(1));
  CHECK(zz(1, 1) == Complex(-1));
  CHECK(zz(2, 2) == Complex(-1));
  CHECK(zz(3, 3) == Complex(1));
}

TEST_CASE("normalized words are orthonormal for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t(1) << (2 * n);
    std::vector<Mat> basis;
    basis.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
      basis.push_back(pauli_word_matrix(PauliWord::from_flat(n, j), true));
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) {
        const double expected = j == k ? 1.0 : 0.0;
        CHECK(std::abs(hs_inner(basis[j], basis[k]) - expected) <= 1e-12);
      }
  }
}

TEST_CASE("hs_expand: known expansions") {
  SUBCASE("maximally mixed qubit") {
    const PauliExpansion e = hs_expand(Mat::Identity(2, 2) / 2.0);
    CHECK(e.coeffs[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    for (std::size_t j = 1; j < 4; ++j) CHECK(std::abs(e.coeffs[j]) <= 1e-14);
  }
  SUBCASE("|0><0|") {
    const PauliExpansion e = hs_expand(basis_projector(2, 0));
    CHECK(e.coeffs[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(e.coeffs[3] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(e.coeffs[1]) <= 1e-14);
    CHECK(std::abs(e.coeffs[2]) <= 1e-14);
  }
  SUBCASE("singlet projector is supported on matching-index words only") {
    const PauliExpansion e = hs_expand(singlet_projector());
    for (std::size_t j = 0; j < 16; ++j) {
      const PauliWord w = PauliWord::from_flat(2, j);
      const bool diagonal_word = w.indices[0] == w.indices[1];
      if (diagonal_word)
        CHECK(std::abs(e.coeffs[j]) > 0.1);
      else
        CHECK(std::abs(e.coeffs[j]) <= 1e-12);
    }
  }
  SUBCASE("rejects non power-of-two dimensions") {
    CHECK_THROWS_AS(hs_expand(Mat::Identity(3, 3)), InvalidInput);
  }
}

TEST_CASE("hs_reconstruct inverts hs_expand on random Hermitians, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const int dim = 1 << n;
    const int trials = n == 3 ? 200 : 400;
    for (int t = 0; t < trials; ++t) {
      const Mat a = random_hermitian(dim, 1000 * n + t);
      const Mat back = hs_reconstruct(hs_expand(a));
      CHECK(hs_norm(back - a) <= 1e-10 * std::max(1.0, hs_norm(a)));
    }
  }
}

TEST_CASE("hs_inner is symmetric, bilinear and positive on the diagonal") {
  for (int t = 0; t < 1000; ++t) {
    const Mat a = random_hermitian(4, 2 * t);
    const Mat b = random_hermitian(4, 2 * t + 1);
    CHECK(std::abs(hs_inner(a, b) - hs_inner(b, a)) <= 1e-10);
    CHECK(hs_inner(a, a) >= 0.0);
    const double lhs = hs_inner(a + 2.5 * b, b);
    const double rhs = hs_inner(a, b) + 2.5 * hs_inner(b, b);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("hermitian_eigensystem: known spectra and residual bound") {
  SUBCASE("sigma_x") {
    const Eigensystem es = hermitian_eigensystem(pauli(1));
    CHECK(es.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.values(1) == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("singlet projector") {
    const Eigensystem es = hermitian_eigensystem(singlet_projector());
    CHECK(es.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(es.values(k)) <= 1e-12);
  }
  SUBCASE("partial transpose of the singlet") {
    // Transpose the second factor by hand: (ik,jl) -> (il,jk).
    const Mat p = singlet_projector();
    Mat pt(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            pt(2 * i + k, 2 * j + l) = p(2 * i + l, 2 * j + k);
    const Eigensystem es = hermitian_eigensystem(pt);
    CHECK(es.values(0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(es.values(1) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(es.values(2) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(es.values(3) == doctest::Approx(-0.5).epsilon(1e-10));
  }
  SUBCASE("residual and unitarity bounds on random inputs") {
    for (int t = 0; t < 200; ++t) {
      const Mat a = random_hermitian(8, 9000 + t);
      const Eigensystem es = hermitian_eigensystem(a);
      const Mat lambda = es.values.cast<Complex>().asDiagonal();
      CHECK(hs_norm(a * es.vectors - es.vectors * lambda) <=
            1e-8 * std::max(1.0, hs_norm(a)));
      CHECK(is_unitary(es.vectors, 1e-9));
      for (int k = 0; k + 1 < 8; ++k) CHECK(es.values(k) >= es.values(k + 1));
    }
  }
  SUBCASE("rejects non-Hermitian input") {
    Mat bad = Mat::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigensystem(bad), InvalidInput);
  }
}

TEST_CASE("is_positive") {
  CHECK(is_positive(random_density_matrix(4, 2, 11).mat()));
  CHECK_FALSE(is_positive(pauli(3)));
  // Partial transpose of a product state stays positive.
  const Mat rho_a = random_density_matrix(2, 2, 5).mat();
  const Mat rho_b = random_density_matrix(2, 2, 6).mat();
  const Mat prod = tensor(rho_a, rho_b.transpose());
  CHECK(is_positive(prod));
}

TEST_CASE("conjugation is a multiplicative group homomorphism") {
  for (int t = 0; t < 200; ++t) {
    const Mat a = random_hermitian(4, 3 * t);
    const Mat b = random_hermitian(4, 3 * t + 1);
    const Mat u = random_unitary(4, 3 * t + 2);
    const Mat lhs = u.adjoint() * (a * b) * u;
    const Mat rhs = (u.adjoint() * a * u) * (u.adjoint() * b * u);
    CHECK(hs_norm(lhs - rhs) <= 1e-10 * std::max(1.0, hs_norm(lhs)));
  }
}

TEST_CASE("random generators honor their contracts") {
  SUBCASE("rank-1 state is pure") {
    const Mat rho = random_density_matrix(2, 1, 42).mat();
    CHECK(std::abs((rho * rho).trace().real() - 1.0) <= 1e-10);
  }
  SUBCASE("same seed, same bits") {
    const Mat a = random_density_matrix(4, 4, 7).mat();
    const Mat b = random_density_matrix(4, 4, 7).mat();
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    const Mat u1 = random_unitary(4, 7);
    const Mat u2 = random_unitary(4, 7);
    CHECK((u1 - u2).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("unitarity") {
    for (int t = 0; t < 50; ++t) {
      const Mat u = random_unitary(2 + t % 5, 100 + t);
      CHECK(is_unitary(u, 1e-10));
    }
  }
  SUBCASE("invalid rank") {
    CHECK_THROWS_AS(random_density_matrix(2, 0, 1), InvalidInput);
    CHECK_THROWS_AS(random_density_matrix(2, 3, 1), InvalidInput);
  }
}

TEST_CASE("partial_trace against direct block sums") {
  const Mat rho_a = random_density_matrix(2, 2, 21).mat();
  const Mat rho_b = random_density_matrix(3, 3, 22).mat();
  const Mat joint = tensor(rho_a, rho_b);
  CHECK(hs_norm(partial_trace(joint, {2, 3}, {0}) - rho_a) <= 1e-12);
  CHECK(hs_norm(partial_trace(joint, {2, 3}, {1}) - rho_b) <= 1e-12);
  const Mat whole = partial_trace(joint, {2, 3}, {0, 1});
  CHECK(hs_norm(whole - joint) <= 1e-12);
}

TEST_CASE("DensityMatrix validates its invariants") {
  CHECK_THROWS_AS(DensityMatrix(pauli(3)), InvalidInput);          // trace 0
  CHECK_THROWS_AS(DensityMatrix(2.0 * basis_projector(2, 0) -
                                basis_projector(2, 1)),
                  InvalidInput);                                   // negative
  CHECK_NOTHROW(DensityMatrix(Mat::Identity(4, 4) / 4.0));
}
