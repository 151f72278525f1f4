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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tnload {

// Qubit 0 is the most significant bit of a basis index. The gate acts on
// qubits (qubit, qubit + 1) and its 4x4 matrix uses the basis |b_q b_{q+1}>
// with b_q as the high bit.
struct TwoQubitGate {
  std::size_t qubit = 0;
  Eigen::Matrix4d matrix = Eigen::Matrix4d::Identity();
};

// Gates in application order.
struct Layer {
  std::vector<TwoQubitGate> gates;
};

// Layers in application order, starting from |0...0>.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Layer> layers;
  double stored_norm = 1.0;
  std::size_t original_length = 0;

  std::size_t depth() const { return layers.size(); }
  std::size_t gate_count() const;
};

double orthogonality_deviation(const Eigen::Matrix4d& g);

// Throws InvalidArgument unless the gate is in SO(4) within tol and acts on
// an adjacent pair inside the register.
void validate_gate(const TwoQubitGate& gate, std::size_t num_qubits,
                   double tol = 1e-10);
void validate_circuit(const Circuit& circuit, double tol = 1e-10);

// Completes k orthonormal columns to an SO(4) matrix, flipping the last
// completed column when the determinant would be -1. With k == 4 the columns
// are returned unchanged.
Eigen::Matrix4d complete_to_so4(const Eigen::MatrixXd& columns);

// Multiplies one gate by -1, which negates the prepared state.
void negate_global_sign(Circuit& circuit);

enum class NativeKind { CX, RY, RZ };

struct NativeGate {
  NativeKind kind = NativeKind::CX;
  std::size_t target = 0;   // rotation qubit, or CX target
  std::size_t control = 0;  // CX only
  double angle = 0.0;
};

// Exactly two CX gates plus RZ/RY rotations. Throws InvalidArgument for a
// matrix outside SO(4).
std::vector<NativeGate> so4_to_native(const TwoQubitGate& gate);

Eigen::Matrix4cd native_unitary(const std::vector<NativeGate>& gates,
                                std::size_t base_qubit);

std::string emit_qasm(const Circuit& circuit);

// Depth of the generic staircase construction for a few register sizes.
std::optional<std::size_t> general_reference_depth(std::size_t num_qubits);

}  // namespace tnload
