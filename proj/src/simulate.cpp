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

#include "tnload/simulate.hpp"

#include <cmath>

#include "tnload/errors.hpp"

namespace tnload {

namespace {

void check_state(std::span<const double> state, std::size_t num_qubits) {
  if (num_qubits >= 8 * sizeof(std::size_t) ||
      state.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("state length does not match the register");
  }
}

template <bool Transpose>
void apply_pair(std::span<double> state, std::size_t num_qubits,
                const TwoQubitGate& gate) {
  check_state(state, num_qubits);
  if (num_qubits < 2 || gate.qubit + 1 >= num_qubits) {
    throw InvalidArgument("gate acts outside the register");
  }
  const std::size_t low = std::size_t{1} << (num_qubits - gate.qubit - 2);
  const std::size_t high = std::size_t{1} << gate.qubit;
  const Eigen::Matrix4d g =
      Transpose ? Eigen::Matrix4d(gate.matrix.transpose()) : gate.matrix;
  for (std::size_t h = 0; h < high; ++h) {
    double* block = state.data() + h * 4 * low;
    for (std::size_t l = 0; l < low; ++l) {
      const double x0 = block[l];
      const double x1 = block[l + low];
      const double x2 = block[l + 2 * low];
      const double x3 = block[l + 3 * low];
      for (int r = 0; r < 4; ++r) {
        block[l + r * low] =
            g(r, 0) * x0 + g(r, 1) * x1 + g(r, 2) * x2 + g(r, 3) * x3;
      }
    }
  }
}

void apply_single(std::vector<std::complex<double>>& state,
                  std::size_t num_qubits, std::size_t qubit,
                  const std::complex<double> m[2][2]) {
  const std::size_t low = std::size_t{1} << (num_qubits - qubit - 1);
  const std::size_t high = std::size_t{1} << qubit;
  for (std::size_t h = 0; h < high; ++h) {
    auto* block = state.data() + h * 2 * low;
    for (std::size_t l = 0; l < low; ++l) {
      const auto a = block[l];
      const auto b = block[l + low];
      block[l] = m[0][0] * a + m[0][1] * b;
      block[l + low] = m[1][0] * a + m[1][1] * b;
    }
  }
}

}  // namespace

void apply_gate(std::span<double> state, std::size_t num_qubits,
                const TwoQubitGate& gate) {
  apply_pair<false>(state, num_qubits, gate);
}

void apply_gate_transpose(std::span<double> state, std::size_t num_qubits,
                          const TwoQubitGate& gate) {
  apply_pair<true>(state, num_qubits, gate);
}

std::vector<double> apply_circuit(const Circuit& circuit) {
  if (circuit.num_qubits == 0 || circuit.num_qubits >= 8 * sizeof(std::size_t)) {
    throw InvalidArgument("circuit has no valid register");
  }
  std::vector<double> state(std::size_t{1} << circuit.num_qubits, 0.0);
  state[0] = 1.0;
  for (const auto& layer : circuit.layers) {
    for (const auto& gate : layer.gates) {
      apply_gate(state, circuit.num_qubits, gate);
    }
  }
  return state;
}

void apply_inverse(std::span<double> state, const Circuit& circuit) {
  for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend();
       ++layer) {
    for (auto gate = layer->gates.rbegin(); gate != layer->gates.rend();
         ++gate) {
      apply_gate_transpose(state, circuit.num_qubits, *gate);
    }
  }
}

Metrics measure(const DataVector& data, const Circuit& circuit) {
  if (circuit.num_qubits != data.num_qubits) {
    throw InvalidArgument("circuit register does not match the data");
  }
  std::vector<double> approx = apply_circuit(circuit);
  for (double& x : approx) x *= circuit.stored_norm;
  return compute_metrics(data, approx);
}

std::vector<std::complex<double>> simulate_native(const NativeProgram& program) {
  const std::size_t n = program.num_qubits;
  if (n == 0 || n >= 8 * sizeof(std::size_t)) {
    throw InvalidArgument("program has no valid register");
  }
  std::vector<std::complex<double>> state(std::size_t{1} << n);
  state[0] = 1.0;
  using cd = std::complex<double>;
  for (const auto& g : program.gates) {
    if (g.target >= n || (g.kind == NativeKind::CX && g.control >= n)) {
      throw InvalidArgument("gate acts outside the register");
    }
    if (g.kind == NativeKind::CX) {
      if (g.control == g.target) throw InvalidArgument("cx on a single qubit");
      const std::size_t cbit = std::size_t{1} << (n - 1 - g.control);
      const std::size_t tbit = std::size_t{1} << (n - 1 - g.target);
      for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(state[i], state[i | tbit]);
      }
    } else if (g.kind == NativeKind::RY) {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      const cd m[2][2] = {{c, -s}, {s, c}};
      apply_single(state, n, g.target, m);
    } else {
      const cd m[2][2] = {{std::polar(1.0, -g.angle / 2), 0.0},
                          {0.0, std::polar(1.0, g.angle / 2)}};
      apply_single(state, n, g.target, m);
    }
  }
  return state;
}

std::vector<double> real_amplitudes(
    std::span<const std::complex<double>> state) {
  std::complex<double> square = 0.0;
  for (const auto& a : state) square += a * a;
  const std::complex<double> phase = std::polar(1.0, -std::arg(square) / 2);
  std::vector<double> out(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    out[i] = (state[i] * phase).real();
  }
  return out;
}

}  // namespace tnload
