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

#include "tnload/compile.hpp"

#include <cmath>

#include "compile_internal.hpp"
#include "tnload/compile_amlet.hpp"
#include "tnload/compile_lbl.hpp"
#include "tnload/errors.hpp"
#include "tnload/simulate.hpp"

namespace tnload {

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::Lbl ? "lbl" : "amlet";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "lbl") return Algorithm::Lbl;
  if (name == "amlet") return Algorithm::Amlet;
  throw InvalidArgument("unknown algorithm: " + name);
}

CompileResult compile(const DataVector& data, Algorithm algorithm,
                      const StopRule& rule) {
  return algorithm == Algorithm::Lbl ? compile_lbl(data, rule)
                                     : compile_amlet(data, rule);
}

CompileResult find_min_depth(const DataVector& data, Algorithm algorithm,
                             MetricKind metric, double threshold,
                             std::size_t depth_cap) {
  return compile(data, algorithm, TargetError{metric, threshold, depth_cap});
}

namespace detail {

void require_compilable(const DataVector& data) {
  if (data.num_qubits < 2) {
    throw InvalidArgument("at least two qubits are required");
  }
  if (data.values.size() != (std::size_t{1} << data.num_qubits)) {
    throw InvalidArgument("data length does not match the register");
  }
  if (!(data.norm > 0.0) || !std::isfinite(data.norm)) {
    throw InvalidArgument("data vector has zero norm");
  }
}

std::vector<double> unit_vector(const DataVector& data) {
  std::vector<double> v = data.values;
  for (double& x : v) x /= data.norm;
  return v;
}

Circuit assemble(const DataVector& data, const std::vector<Layer>& layers) {
  Circuit c;
  c.num_qubits = data.num_qubits;
  c.layers.assign(layers.rbegin(), layers.rend());
  c.stored_norm = data.norm;
  c.original_length = data.original_length;
  return c;
}

void finalize(const DataVector& data, CompileResult& result) {
  std::vector<double> state = apply_circuit(result.circuit);
  double dot = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) dot += state[i] * data.values[i];
  if (dot < 0.0) {
    negate_global_sign(result.circuit);
    for (double& x : state) x = -x;
  }
  for (double& x : state) x *= data.norm;
  result.report.measured = compute_metrics(data, state);
  result.report.depth = result.circuit.depth();
}

ResidualTracker::ResidualTracker(const DataVector& data)
    : data_(data), residual_(unit_vector(data)), ones_(data.values.size(), 0.0) {
  for (std::size_t i = 0; i < data.original_length; ++i) ones_[i] = 1.0;
}

void ResidualTracker::push(const Layer& layer) {
  for (auto g = layer.gates.rbegin(); g != layer.gates.rend(); ++g) {
    apply_gate_transpose(residual_, data_.num_qubits, *g);
    apply_gate_transpose(ones_, data_.num_qubits, *g);
  }
}

Metrics ResidualTracker::metrics() const {
  const double sign = residual_[0] < 0.0 ? -1.0 : 1.0;
  double diff = (residual_[0] - sign) * (residual_[0] - sign);
  for (std::size_t i = 1; i < residual_.size(); ++i) {
    diff += residual_[i] * residual_[i];
  }
  Metrics m;
  m.eps_l2 = data_.norm * std::sqrt(diff);
  double exact_sum = 0.0;
  for (std::size_t i = 0; i < data_.original_length; ++i) {
    exact_sum += data_.values[i];
  }
  m.eps_momentum = std::abs(exact_sum - data_.norm * sign * ones_[0]);
  if (data_.atom_count && *data_.atom_count > 0) {
    m.eps_rmsd = m.eps_l2 / std::sqrt(static_cast<double>(*data_.atom_count));
  }
  m.fidelity = residual_[0] * residual_[0];
  return m;
}

}  // namespace detail

}  // namespace tnload
