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

#include "circuit_samples.hpp"
#include "qnetlab/heisenberg.hpp"

using namespace qnet;

namespace {

const Complex kI(0.0, 1.0);

Mat bell_phi_plus_projector() {
  Vec psi(4);
  psi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("time-zero descriptors are bare Pauli words") {
  SUBCASE("single qubit") {
    QubitNetwork net(1);
    for (int m = 1; m <= 3; ++m)
      CHECK(hs_norm(net.descriptor(1).comp[m - 1] - pauli(m)) == 0.0);
  }
  SUBCASE("two qubits, first slot") {
    QubitNetwork net(2);
    CHECK(hs_norm(net.descriptor(1).comp[0] -
                  tensor(pauli(1), Mat::Identity(2, 2))) == 0.0);
  }
  SUBCASE("three qubits, middle slot") {
    QubitNetwork net(3);
    const Mat expected =
        tensor(tensor(Mat::Identity(2, 2), pauli(3)), Mat::Identity(2, 2));
    CHECK(hs_norm(net.descriptor(2).comp[2] - expected) == 0.0);
  }
  SUBCASE("qubit count guard") {
    CHECK_THROWS_AS(QubitNetwork(0), InvalidInput);
    CHECK_THROWS_AS(QubitNetwork(9), InvalidInput);
  }
}

TEST_CASE("gates act by conjugation with the embedded unitary") {
  // Against the direct U^dag A U with U accumulated over the whole history.
  QubitNetwork net(3);
  const auto circuit = testing::random_circuit(3, 12, 424242);
  Mat total = Mat::Identity(8, 8);
  for (const Gate& g : circuit) total = embed_gate(g, 3) * total;
  net = net.applied(circuit);
  for (int q = 1; q <= 3; ++q) {
    const QubitNetwork fresh(3);
    for (int m = 0; m < 3; ++m) {
      const Mat expected =
          total.adjoint() * fresh.descriptor(q).comp[m] * total;
      CHECK(hs_norm(net.descriptor(q).comp[m] - expected) <= 1e-10);
    }
  }
}

TEST_CASE("a gate on another qubit leaves a descriptor untouched") {
  QubitNetwork net(2);
  const QubitNetwork after = net.applied(Gate::h(2)).applied(Gate::rz(2, 0.3));
  CHECK(descriptor_distance(net.descriptor(1), after.descriptor(1)) == 0.0);
}

TEST_CASE("heisenberg_gate equals the history-conjugated embedding") {
  QubitNetwork net(3);
  net = net.applied(testing::random_circuit(3, 10, 1234));
  for (const Gate& g : {Gate::h(2), Gate::cnot(3, 1), Gate::ry(1, 0.9)}) {
    const Mat substituted = net.heisenberg_gate(g);
    const Mat direct = net.circuit_unitary().adjoint() * embed_gate(g, 3) *
                       net.circuit_unitary();
    CHECK(hs_norm(substituted - direct) <= 1e-10);
    CHECK(is_unitary(substituted, 1e-9));
  }
}

TEST_CASE("interaction spreads support onto the partner's slot") {
  QubitNetwork net(2);
  net = net.applied(Gate::h(1)).applied(Gate::cnot(1, 2));
  // q1 components must no longer be of product form sigma (x) identity:
  // expanding in Pauli words must show weight on words with a non-identity
  // second slot.
  const PauliExpansion e = hs_expand(net.descriptor(1).comp[0]);
  double off_slot_weight = 0.0;
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
    const PauliWord w = PauliWord::from_flat(2, j);
    if (w.indices[1] != 0) off_slot_weight += e.coeffs[j] * e.coeffs[j];
  }
  CHECK(off_slot_weight > 0.5);
}

TEST_CASE("an involution returns the descriptors") {
  QubitNetwork net(2);
  const QubitNetwork back = net.applied(Gate::x(1)).applied(Gate::x(1));
  for (int q = 1; q <= 2; ++q)
    CHECK(descriptor_distance(net.descriptor(q), back.descriptor(q)) <= 1e-12);
}

TEST_CASE("Pauli algebra survives arbitrary circuits") {
  QubitNetwork net(3);
  net = net.applied(testing::random_circuit(3, 15, 777));
  for (int q = 1; q <= 3; ++q) {
    const auto& d = net.descriptor(q);
    CHECK(hs_norm(d.comp[0] * d.comp[1] - kI * d.comp[2]) <= 1e-10);
    CHECK(hs_norm(d.comp[1] * d.comp[2] - kI * d.comp[0]) <= 1e-10);
    CHECK(hs_norm(d.comp[2] * d.comp[0] - kI * d.comp[1]) <= 1e-10);
    for (int m = 0; m < 3; ++m)
      CHECK(hs_norm(d.comp[m] * d.comp[m] - Mat::Identity(8, 8)) <= 1e-10);
  }
}

TEST_CASE("reconstruction: identity circuit and Bell pair") {
  SUBCASE("empty circuit on the all-zero state") {
    QubitNetwork net(2);
    const Mat rho = reconstruct_density(net, InitialState::all_zero());
    Mat expected = Mat::Zero(4, 4);
    expected(0, 0) = 1.0;
    CHECK(hs_norm(rho - expected) <= 1e-12);
  }
  SUBCASE("H then CNOT gives the phi+ projector") {
    QubitNetwork net(2);
    net = net.applied(Gate::h(1)).applied(Gate::cnot(1, 2));
    const Mat rho = reconstruct_density(net, InitialState::all_zero());
    CHECK(hs_norm(rho - bell_phi_plus_projector()) <= 1e-10);
  }
}

TEST_CASE("Heisenberg and Schrodinger paths agree on random circuits") {
  int trials = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 25; ++t) {
      const auto circuit = testing::random_circuit(n, 4 + t % 17, 100 * n + t);
      const QubitNetwork net = QubitNetwork(n).applied(circuit);
      const Mat a = reconstruct_density(net, InitialState::all_zero());
      const Mat b =
          schrodinger_reference(circuit, n, InitialState::all_zero());
      CHECK(hs_norm(a - b) <= 1e-10);
      ++trials;
    }
  }
  CHECK(trials == 100);
}

TEST_CASE("agreement also holds for a mixed initial state") {
  const DensityMatrix init = random_density_matrix(8, 3, 99);
  const auto circuit = testing::random_circuit(3, 14, 2024);
  const QubitNetwork net = QubitNetwork(3).applied(circuit);
  const Mat a = reconstruct_density(net, InitialState::state(init));
  const Mat b = schrodinger_reference(circuit, 3, InitialState::state(init));
  CHECK(hs_norm(a - b) <= 1e-10);
}

TEST_CASE("reduced states") {
  SUBCASE("Bell pair leaves each side maximally mixed") {
    QubitNetwork net(2);
    net = net.applied(Gate::h(1)).applied(Gate::cnot(1, 2));
    const Mat r1 = reduced_density(net, InitialState::all_zero(), {1});
    CHECK(hs_norm(r1 - Mat::Identity(2, 2) / 2.0) <= 1e-12);
  }
  SUBCASE("product state, single slot") {
    QubitNetwork net(2);
    const Mat r2 = reduced_density(net, InitialState::all_zero(), {2});
    Mat expected = Mat::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(hs_norm(r2 - expected) <= 1e-12);
  }
  SUBCASE("matches the partial trace of the full reconstruction") {
    for (int n = 2; n <= 3; ++n) {
      const auto circuit = testing::random_circuit(n, 10, 31 + n);
      const QubitNetwork net = QubitNetwork(n).applied(circuit);
      const Mat full = reconstruct_density(net, InitialState::all_zero());
      const std::vector<int> dims(n, 2);
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> subset, keep;
        for (int q = 1; q <= n; ++q)
          if (mask & (1 << (q - 1))) {
            subset.push_back(q);
            keep.push_back(q - 1);
          }
        const Mat direct =
            reduced_density(net, InitialState::all_zero(), subset);
        const Mat traced = partial_trace(full, dims, keep);
        CHECK(hs_norm(direct - traced) <= 1e-10);
      }
    }
  }
  SUBCASE("input validation") {
    QubitNetwork net(2);
    CHECK_THROWS_AS(reduced_density(net, InitialState::all_zero(), {}),
                    InvalidInput);
    CHECK_THROWS_AS(reduced_density(net, InitialState::all_zero(), {3}),
                    InvalidInput);
    CHECK_THROWS_AS(reduced_density(net, InitialState::all_zero(), {1, 1}),
                    InvalidInput);
  }
}

TEST_CASE("schrodinger_reference basics") {
  SUBCASE("empty circuit returns the initial state") {
    const Mat rho = schrodinger_reference({}, 2, InitialState::all_zero());
    Mat expected = Mat::Zero(4, 4);
    expected(0, 0) = 1.0;
    CHECK(hs_norm(rho - expected) <= 1e-14);
  }
  SUBCASE("one Hadamard makes |+>") {
    const Mat rho =
        schrodinger_reference({Gate::h(1)}, 1, InitialState::all_zero());
    Mat expected(2, 2);
    expected << 0.5, 0.5, 0.5, 0.5;
    CHECK(hs_norm(rho - expected) <= 1e-12);
  }
}

TEST_CASE("interaction order decides parameter dependence") {
  // Two qubits, two orderings. (a) A gate on qubit 2 first, then an
  // interaction: q1 ends up depending on the early gate's parameter.
  auto early_then_interact = [](double angle) {
    return std::vector<Gate>{Gate::ry(2, angle), Gate::cnot(1, 2)};
  };
  const QubitNetwork a1 = QubitNetwork(2).applied(early_then_interact(0.3));
  const QubitNetwork a2 = QubitNetwork(2).applied(early_then_interact(1.9));
  CHECK(descriptor_distance(a1.descriptor(1), a2.descriptor(1)) > 1e-3);

  // (b) Interaction first, then a gate on qubit 2 alone: q1 is untouched by
  // the later parameter, even though the qubits interacted before.
  auto interact_then_late = [](double angle) {
    return std::vector<Gate>{Gate::cnot(1, 2), Gate::ry(2, angle)};
  };
  const QubitNetwork b1 = QubitNetwork(2).applied(interact_then_late(0.3));
  const QubitNetwork b2 = QubitNetwork(2).applied(interact_then_late(1.9));
  CHECK(descriptor_distance(b1.descriptor(1), b2.descriptor(1)) == 0.0);
}

TEST_CASE("contiguity: descriptors ignore gates outside their past cone") {
  // Bell-experiment wiring: pair (2,3), theta-side measurement recorded on 1,
  // phi-side on 4. Changing phi must leave q1 and q2 bit-identical.
  auto bell_circuit = [](double theta, double phi) {
    return std::vector<Gate>{
        Gate::h(2),           Gate::cnot(2, 3), Gate::ry(2, -theta),
        Gate::cnot(2, 1),     Gate::ry(3, -phi), Gate::cnot(3, 4),
    };
  };
  const QubitNetwork a = QubitNetwork(4).applied(bell_circuit(0.7, 0.1));
  const QubitNetwork b = QubitNetwork(4).applied(bell_circuit(0.7, 2.9));
  CHECK(descriptor_distance(a.descriptor(1), b.descriptor(1)) <= 1e-12);
  CHECK(descriptor_distance(a.descriptor(2), b.descriptor(2)) <= 1e-12);
  // The phi-side descriptors do change.
  CHECK(descriptor_distance(a.descriptor(3), b.descriptor(3)) > 1e-3);

  // After 1 interacts with 2, q1 picks up dependence on 2's earlier gates.
  auto with_prep = [](double prep) {
    return std::vector<Gate>{Gate::ry(2, prep), Gate::cnot(2, 1)};
  };
  const QubitNetwork c = QubitNetwork(2).applied(with_prep(0.2));
  const QubitNetwork d = QubitNetwork(2).applied(with_prep(1.2));
  CHECK(descriptor_distance(c.descriptor(1), d.descriptor(1)) > 1e-3);
}

TEST_CASE("custom unitary gate") {
  const Mat u = random_unitary(2, 55);
  QubitNetwork net(2);
  net = net.applied(Gate::unitary(u, {2}));
  const Mat direct = schrodinger_reference({Gate::unitary(u, {2})}, 2,
                                           InitialState::all_zero());
  const Mat rebuilt = reconstruct_density(net, InitialState::all_zero());
  CHECK(hs_norm(rebuilt - direct) <= 1e-10);
  CHECK_THROWS_AS(Gate::unitary(Mat::Identity(3, 3), {1}), InvalidInput);
  Mat not_unitary = Mat::Identity(2, 2) * 2.0;
  CHECK_THROWS_AS(Gate::unitary(not_unitary, {1}), InvalidInput);
}
