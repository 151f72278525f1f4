// Copyright 2026 The tnload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tnload/errors.hpp"
#include "tnload/simulate.hpp"
#include "tnload/synthetic.hpp"

using namespace tnload;

namespace {

std::vector<double> aligned(const std::vector<double>& state,
                            const std::vector<double>& reference) {
  double dot = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) dot += state[i] * reference[i];
  std::vector<double> out = state;
  if (dot < 0) {
    for (double& x : out) x = -x;
  }
  return out;
}

}  // namespace

TEST_CASE("simulator matches the dense circuit matrix") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 3;
    const Circuit c = oracle::random_circuit(rng, n, 1 + static_cast<std::size_t>(trial) % 4);
    const Eigen::MatrixXd u = oracle::circuit_matrix(c);
    const auto state = apply_circuit(c);
    double err = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) err = std::max(err, std::abs(state[i] - u(i, 0)));
    CHECK(err <= 1e-12);

    std::vector<double> psi = random_vector(n, static_cast<std::uint64_t>(trial));
    const Eigen::VectorXd expect = u.transpose() * Eigen::Map<Eigen::VectorXd>(psi.data(), psi.size());
    apply_inverse(psi, c);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(std::abs(psi[i] - expect(i)) <= 1e-12);
  }
}

TEST_CASE("trivial circuits") {
  Circuit c;
  c.num_qubits = 3;
  CHECK(apply_circuit(c) == basis_state(3, 0));
  c.layers.push_back({{{1, Eigen::Matrix4d::Identity()}, {0, Eigen::Matrix4d::Identity()}}});
  CHECK(apply_circuit(c) == basis_state(3, 0));
}

TEST_CASE("gate on qubits (1, 2) of three uses qubit 1 as the high bit") {
  Eigen::Matrix4d swap_low = Eigen::Matrix4d::Zero();
  swap_low(0, 0) = 1;
  swap_low(1, 2) = 1;
  swap_low(2, 1) = 1;
  swap_low(3, 3) = 1;
  auto psi = basis_state(3, 0b010);
  apply_gate(psi, 3, {1, swap_low});
  CHECK(psi == basis_state(3, 0b001));
  CHECK_THROWS_AS(apply_gate(psi, 3, {2, swap_low}), InvalidArgument);
  std::vector<double> wrong(4, 0.0);
  CHECK_THROWS_AS(apply_gate(wrong, 3, {0, swap_low}), InvalidArgument);
}

TEST_CASE("QASM round trip preserves the prepared state") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 4;
    Circuit c = oracle::random_circuit(rng, n, 1 + static_cast<std::size_t>(trial) % 3);
    c.stored_norm = 1.5 + trial;
    c.original_length = 3;
    const NativeProgram p = parse_qasm(emit_qasm(c));
    CHECK(p.num_qubits == n);
    CHECK(p.stored_norm == 1.5 + trial);
    CHECK(p.original_length == 3);
    const auto exact = apply_circuit(c);
    const auto replay = aligned(real_amplitudes(simulate_native(p)), exact);
    CHECK(oracle::distance(replay, exact) <= 1e-12);
  }
}

TEST_CASE("QASM parser accepts angle expressions and reports bad lines") {
  const auto p = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg r[2];\n"
      "ry(pi/2) r[0]; rz(-2*pi) r[1];\ncx r[0], r[1];\n");
  REQUIRE(p.gates.size() == 3);
  CHECK(p.gates[0].angle == doctest::Approx(std::numbers::pi / 2));
  CHECK(p.gates[1].angle == doctest::Approx(-2 * std::numbers::pi));
  CHECK(p.gates[2].control == 0);
  CHECK(p.gates[2].target == 1);

  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 3);
  }
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nry(0.1) q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[2];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\n"), ParseError);
}

TEST_CASE("metrics against a known reconstruction") {
  DataVector d = make_data_vector({3.0, 4.0, 0.0}, 2, MetricKind::L2, "t");
  CHECK(d.values.size() == 4);
  CHECK(d.original_length == 3);
  CHECK(d.norm == doctest::Approx(5.0));
  const std::vector<double> approx = {3.0, 3.0, 1.0, 2.0};
  const Metrics m = compute_metrics(d, approx);
  CHECK(m.eps_l2 == doctest::Approx(std::sqrt(6.0)));
  CHECK(m.eps_momentum == doctest::Approx(0.0));
  CHECK_FALSE(m.eps_rmsd.has_value());
  CHECK(m.fidelity == doctest::Approx(21.0 * 21.0 / (25.0 * 23.0)));
  d.atom_count = 4;
  CHECK(*compute_metrics(d, approx).eps_rmsd == doctest::Approx(std::sqrt(6.0) / 2.0));
}

TEST_CASE("measure uses the stored norm") {
  DataVector d = make_data_vector(basis_state(2, 0), 2, MetricKind::L2, "t");
  for (double& x : d.values) x *= 7.0;
  d.norm = 7.0;
  Circuit c;
  c.num_qubits = 2;
  c.stored_norm = 7.0;
  const Metrics m = measure(d, c);
  CHECK(m.eps_l2 == doctest::Approx(0.0));
  CHECK(m.fidelity == doctest::Approx(1.0));
}
