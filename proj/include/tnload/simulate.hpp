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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tnload/circuit.hpp"
#include "tnload/data.hpp"

namespace tnload {

void apply_gate(std::span<double> state, std::size_t num_qubits,
                const TwoQubitGate& gate);
void apply_gate_transpose(std::span<double> state, std::size_t num_qubits,
                          const TwoQubitGate& gate);

// Final state of the circuit applied to |0...0>.
std::vector<double> apply_circuit(const Circuit& circuit);

// Applies the inverse circuit to state, last gate first.
void apply_inverse(std::span<double> state, const Circuit& circuit);

// Metrics of stored_norm * apply_circuit(circuit) against the data.
Metrics measure(const DataVector& data, const Circuit& circuit);

struct NativeProgram {
  std::size_t num_qubits = 0;
  std::vector<NativeGate> gates;
  double stored_norm = 1.0;
  std::size_t original_length = 0;
};

// Reads the qreg/cx/ry/rz subset plus the norm and original_length comment
// lines. ParseError locations are 1-based line numbers.
NativeProgram parse_qasm(std::string_view text);

std::vector<std::complex<double>> simulate_native(const NativeProgram& program);

// Removes the global phase that maximises the real part and returns the real
// component.
std::vector<double> real_amplitudes(
    std::span<const std::complex<double>> state);

}  // namespace tnload
