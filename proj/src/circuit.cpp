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

#include "tnload/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tnload/errors.hpp"
#include "tnload/tensor.hpp"

namespace tnload {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::size_t Circuit::gate_count() const {
  std::size_t count = 0;
  for (const auto& layer : layers) count += layer.gates.size();
  return count;
}

double orthogonality_deviation(const Eigen::Matrix4d& g) {
  return (g.transpose() * g - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
}

void validate_gate(const TwoQubitGate& gate, std::size_t num_qubits,
                   double tol) {
  if (num_qubits < 2 || gate.qubit + 1 >= num_qubits) {
    throw InvalidArgument("gate acts outside the register");
  }
  if (!gate.matrix.allFinite()) throw InvalidArgument("gate is not finite");
  if (!(orthogonality_deviation(gate.matrix) <= tol)) {
    throw InvalidArgument("gate is not orthogonal");
  }
  if (!(std::abs(gate.matrix.determinant() - 1.0) <= tol)) {
    throw InvalidArgument("gate determinant is not +1");
  }
}

void validate_circuit(const Circuit& circuit, double tol) {
  for (const auto& layer : circuit.layers) {
    for (const auto& gate : layer.gates) {
      validate_gate(gate, circuit.num_qubits, tol);
    }
  }
}

Eigen::Matrix4d complete_to_so4(const Eigen::MatrixXd& columns) {
  if (columns.rows() != 4 || columns.cols() > 4) {
    throw InvalidArgument("expected at most four columns of length four");
  }
  Eigen::Matrix4d g = nullspace_complete(columns);
  if (g.determinant() < 0.0) {
    if (columns.cols() == 4) {
      throw InvalidArgument("full basis has determinant -1");
    }
    g.col(3) = -g.col(3);
  }
  return g;
}

void negate_global_sign(Circuit& circuit) {
  for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend();
       ++layer) {
    if (!layer->gates.empty()) {
      layer->gates.back().matrix = -layer->gates.back().matrix;
      return;
    }
  }
  throw InvalidArgument("circuit has no gate to carry the sign");
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "// norm=" << format_double(circuit.stored_norm) << "\n";
  out << "// original_length=" << circuit.original_length << "\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const auto& layer : circuit.layers) {
    for (const auto& gate : layer.gates) {
      for (const auto& g : so4_to_native(gate)) {
        switch (g.kind) {
          case NativeKind::CX:
            out << "cx q[" << g.control << "],q[" << g.target << "];\n";
            break;
          case NativeKind::RY:
            out << "ry(" << format_double(g.angle) << ") q[" << g.target
                << "];\n";
            break;
          case NativeKind::RZ:
            out << "rz(" << format_double(g.angle) << ") q[" << g.target
                << "];\n";
            break;
        }
      }
    }
  }
  return out.str();
}

std::optional<std::size_t> general_reference_depth(std::size_t num_qubits) {
  if (num_qubits == 12) return 215;
  if (num_qubits == 16) return 2715;
  return std::nullopt;
}

}  // namespace tnload
