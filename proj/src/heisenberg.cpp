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

#include "qnetlab/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qnet {

namespace {

constexpr int kMaxQubits = 8;

void check_targets(const std::vector<int>& targets) {
  if (targets.empty()) throw InvalidInput("gate needs at least one target");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 1) throw InvalidInput("gate target must be >= 1");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw InvalidInput("gate targets must be distinct");
  }
}

void check_in_range(const std::vector<int>& targets, int n) {
  for (int t : targets)
    if (t > n) throw InvalidInput("gate target exceeds qubit count");
}

Mat rotation(int axis, double angle) {
  const Complex mi(0.0, -1.0);
  return std::cos(angle / 2.0) * Mat::Identity(2, 2) +
         mi * std::sin(angle / 2.0) * pauli(axis);
}

}  // namespace

double descriptor_distance(const Descriptor& a, const Descriptor& b) {
  if (a.dim() != b.dim())
    throw InvalidInput("descriptor_distance: dimension mismatch");
  double worst = 0.0;
  for (int m = 0; m < 3; ++m)
    worst = std::max(worst, hs_norm(a.comp[m] - b.comp[m]));
  return worst;
}

Gate Gate::h(int q) { return Gate{Kind::H, {q}, 0.0, {}}; }
Gate Gate::x(int q) { return Gate{Kind::X, {q}, 0.0, {}}; }
Gate Gate::y(int q) { return Gate{Kind::Y, {q}, 0.0, {}}; }
Gate Gate::z(int q) { return Gate{Kind::Z, {q}, 0.0, {}}; }
Gate Gate::rx(int q, double angle) { return Gate{Kind::RX, {q}, angle, {}}; }
Gate Gate::ry(int q, double angle) { return Gate{Kind::RY, {q}, angle, {}}; }
Gate Gate::rz(int q, double angle) { return Gate{Kind::RZ, {q}, angle, {}}; }
Gate Gate::cnot(int control, int target) {
  return Gate{Kind::CNOT, {control, target}, 0.0, {}};
}
Gate Gate::cz(int a, int b) { return Gate{Kind::CZ, {a, b}, 0.0, {}}; }

Gate Gate::unitary(Mat u, std::vector<int> targets) {
  check_targets(targets);
  const Eigen::Index want = Eigen::Index(1) << targets.size();
  if (u.rows() != want || u.cols() != want)
    throw InvalidInput("custom gate matrix has the wrong dimension");
  if (!is_unitary(u, 1e-10))
    throw InvalidInput("custom gate matrix is not unitary");
  return Gate{Kind::Unitary, std::move(targets), 0.0, std::move(u)};
}

Mat Gate::local_matrix() const {
  check_targets(targets);
  switch (kind) {
    case Kind::H: {
      Mat h(2, 2);
      h << 1, 1, 1, -1;
      return h / std::sqrt(2.0);
    }
    case Kind::X:
      return pauli(1);
    case Kind::Y:
      return pauli(2);
    case Kind::Z:
      return pauli(3);
    case Kind::RX:
      return rotation(1, angle);
    case Kind::RY:
      return rotation(2, angle);
    case Kind::RZ:
      return rotation(3, angle);
    case Kind::CNOT: {
      Mat g = Mat::Zero(4, 4);
      g(0, 0) = g(1, 1) = 1.0;
      g(2, 3) = g(3, 2) = 1.0;
      return g;
    }
    case Kind::CZ: {
      Mat g = Mat::Identity(4, 4);
      g(3, 3) = -1.0;
      return g;
    }
    case Kind::Unitary:
      return matrix;
  }
  throw InvalidInput("unknown gate kind");
}

Mat embed_gate(const Gate& g, int n) {
  check_targets(g.targets);
  check_in_range(g.targets, n);
  const Mat u = g.local_matrix();
  const int k = static_cast<int>(g.targets.size());
  const long dim = 1L << n;

  // Extracts the local index of the gate's targets from a full index;
  // the first target supplies the most significant local bit.
  auto local_of = [&](long full) {
    long local = 0;
    for (int i = 0; i < k; ++i) {
      const int bit = static_cast<int>((full >> (n - g.targets[i])) & 1);
      local = (local << 1) | bit;
    }
    return local;
  };
  auto rest_of = [&](long full) {
    long rest = full;
    for (int i = 0; i < k; ++i) rest &= ~(1L << (n - g.targets[i]));
    return rest;
  };

  Mat out = Mat::Zero(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const long rest = rest_of(r);
    const long lr = local_of(r);
    for (long lc = 0; lc < (1L << k); ++lc) {
      // Scatter the local column bits into the full index.
      long c = rest;
      for (int i = 0; i < k; ++i)
        if ((lc >> (k - 1 - i)) & 1) c |= 1L << (n - g.targets[i]);
      out(r, c) = u(lr, lc);
    }
  }
  return out;
}

InitialState InitialState::all_zero() { return InitialState(); }

InitialState InitialState::state(DensityMatrix rho) {
  InitialState s;
  s.rho_ = std::move(rho);
  return s;
}

Complex InitialState::expectation(const Mat& a) const {
  if (!rho_) return a(0, 0);
  if (rho_->dim() != a.rows())
    throw InvalidInput("initial state dimension does not match operator");
  return (rho_->mat() * a).trace();
}

Mat InitialState::density(int dim) const {
  if (rho_) {
    if (rho_->dim() != dim)
      throw InvalidInput("initial state has the wrong dimension");
    return rho_->mat();
  }
  Mat zero = Mat::Zero(dim, dim);
  zero(0, 0) = 1.0;
  return zero;
}

QubitNetwork::QubitNetwork(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits)
    throw InvalidInput("qubit count must be in 1..8 (3n dense 2^n matrices)");
  total_ = Mat::Identity(1L << n, 1L << n);
  descriptors_.reserve(n);
  for (int q = 1; q <= n; ++q) {
    Descriptor d;
    d.qubit = q;
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> idx(n, 0);
      idx[q - 1] = m;
      d.comp[m - 1] = pauli_word_matrix(PauliWord(n, std::move(idx)), false);
    }
    descriptors_.push_back(std::move(d));
  }
}

const Descriptor& QubitNetwork::descriptor(int qubit) const {
  if (qubit < 1 || qubit > n_) throw InvalidInput("qubit index out of range");
  return descriptors_[qubit - 1];
}

Mat QubitNetwork::heisenberg_gate(const Gate& g) const {
  check_targets(g.targets);
  check_in_range(g.targets, n_);
  const Mat u = g.local_matrix();
  const int k = static_cast<int>(g.targets.size());
  const long dim = 1L << n_;
  const std::size_t words = std::size_t(1) << (2 * k);

  // U(t)^dag G U(t) without the history: expand the local gate over Pauli
  // words of its targets and substitute the targets' current components.
  // Conjugation being multiplicative makes the substitution exact.
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t w = 0; w < words; ++w) {
    const PauliWord word = PauliWord::from_flat(k, w);
    const Mat sigma = pauli_word_matrix(word, false);
    const Complex coeff = (u * sigma).trace() / std::pow(2.0, k);
    if (std::abs(coeff) < 1e-15) continue;
    Mat term = Mat::Identity(dim, dim);
    bool first = true;
    for (int i = 0; i < k; ++i) {
      const int m = word.indices[i];
      if (m == 0) continue;
      const Mat& q = descriptors_[g.targets[i] - 1].comp[m - 1];
      term = first ? q : Mat(term * q);
      first = false;
    }
    out += coeff * term;
  }
  return out;
}

QubitNetwork QubitNetwork::applied(const Gate& g) const {
  check_targets(g.targets);
  check_in_range(g.targets, n_);
  const Mat g_full = embed_gate(g, n_);
  QubitNetwork next(*this);
  next.total_ = g_full * total_;
  // q_i(t+1) = U(t+1)^dag q_i(0) U(t+1). A gate commutes exactly with the
  // bare word of any qubit it does not act on, so only target triples move;
  // those are rebuilt from the exact time-zero word.
  for (int t : g.targets) {
    Descriptor& d = next.descriptors_[t - 1];
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> idx(n_, 0);
      idx[t - 1] = m;
      const Mat bare = pauli_word_matrix(PauliWord(n_, std::move(idx)), false);
      d.comp[m - 1] = next.total_.adjoint() * bare * next.total_;
    }
  }
  next.history_.push_back(g);
  return next;
}

QubitNetwork QubitNetwork::applied(const std::vector<Gate>& gates) const {
  QubitNetwork net(*this);
  for (const Gate& g : gates) net = net.applied(g);
  return net;
}

namespace {

// Depth-first sum over Pauli words restricted to the given slots. At each
// leaf, `emit` receives the bare word factor (dim 2^|slots|) and the
// evolved product of the matching descriptor components (full dim).
void for_each_word(const QubitNetwork& net, const std::vector<int>& slots,
                   const std::function<void(const Mat&, const Mat&)>& emit) {
  const long full_dim = 1L << net.qubit_count();
  std::function<void(std::size_t, const Mat&, const Mat&)> walk =
      [&](std::size_t depth, const Mat& bare, const Mat& evolved) {
        if (depth == slots.size()) {
          emit(bare, evolved);
          return;
        }
        const int qubit = slots[depth];
        for (int m = 0; m < 4; ++m) {
          const Mat next_bare = tensor(bare, pauli(m));
          if (m == 0) {
            walk(depth + 1, next_bare, evolved);
          } else {
            const Mat& q = net.descriptor(qubit).comp[m - 1];
            walk(depth + 1, next_bare, Mat(evolved * q));
          }
        }
      };
  walk(0, Mat::Identity(1, 1), Mat::Identity(full_dim, full_dim));
}

}  // namespace

DensityMatrix reconstruct_density(const QubitNetwork& net,
                                  const InitialState& init) {
  const int n = net.qubit_count();
  const long dim = 1L << n;
  std::vector<int> slots(n);
  for (int q = 1; q <= n; ++q) slots[q - 1] = q;

  Mat rho = Mat::Zero(dim, dim);
  for_each_word(net, slots, [&](const Mat& bare, const Mat& evolved) {
    rho += init.expectation(evolved) * bare;
  });
  rho /= std::pow(2.0, n);
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix reduced_density(const QubitNetwork& net,
                              const InitialState& init,
                              std::vector<int> subset) {
  const int n = net.qubit_count();
  if (subset.empty()) throw InvalidInput("reduced_density: empty subset");
  std::sort(subset.begin(), subset.end());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n)
      throw InvalidInput("reduced_density: qubit index out of range");
    if (i > 0 && subset[i] == subset[i - 1])
      throw InvalidInput("reduced_density: duplicate qubit index");
  }

  const long dim = 1L << subset.size();
  Mat rho = Mat::Zero(dim, dim);
  for_each_word(net, subset, [&](const Mat& bare, const Mat& evolved) {
    rho += init.expectation(evolved) * bare;
  });
  rho /= std::pow(2.0, static_cast<double>(subset.size()));
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix schrodinger_reference(const std::vector<Gate>& circuit, int n,
                                    const InitialState& init) {
  if (n < 1 || n > kMaxQubits) throw InvalidInput("qubit count must be in 1..8");
  Mat rho = init.density(1 << n);
  for (const Gate& g : circuit) {
    const Mat u = embed_gate(g, n);
    rho = u * rho * u.adjoint();
  }
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix(std::move(rho));
}

}  // namespace qnet
