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

#include "tnload/compile_amlet.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "compile_internal.hpp"
#include "tnload/errors.hpp"
#include "tnload/mps.hpp"
#include "tnload/simulate.hpp"

namespace tnload {

namespace {

double distance_from_origin(const std::vector<double>& state) {
  double sum = (state[0] - 1.0) * (state[0] - 1.0);
  for (std::size_t i = 1; i < state.size(); ++i) sum += state[i] * state[i];
  return std::sqrt(sum);
}

// Disentangles state in place with one full layer and returns the layer in
// application order.
Layer dense_layer(std::vector<double>& state, std::size_t n) {
  Layer layer;
  for (std::size_t q = 0; q + 1 < n; ++q) {
    TwoQubitGate g = pair_disentangler(state, n, q);
    apply_gate_transpose(state, n, g);
    layer.gates.push_back(std::move(g));
  }
  std::reverse(layer.gates.begin(), layer.gates.end());
  return layer;
}

CompileResult compile_fixed(const DataVector& data, std::size_t depth,
                            std::chrono::steady_clock::time_point start) {
  const std::size_t n = data.num_qubits;
  const std::vector<double> unit = detail::unit_vector(data);
  const MpsDecomposition dec = vector_to_mps(unit, amlet_bond_caps(n, depth));

  CompileResult r;
  r.report.algorithm = Algorithm::Amlet;
  for (double d : check_left_canonical(dec.mps)) {
    r.report.max_canonical_deviation = std::max(r.report.max_canonical_deviation, d);
  }
  for (const auto& b : dec.bonds) {
    if (b.discarded_weight > detail::kTruncationTol) {
      r.report.truncation_events.push_back({b.cut, 0, b.cut, b.discarded_weight});
    }
  }

  std::vector<double> state = mps_to_vector(dec.mps);
  for (double& x : state) x /= dec.mps.norm;

  // Wavefront over (layer, pair): gate k of layer l runs at step k + l, so
  // the whole circuit is produced in one pass down the chain.
  std::vector<Layer> layers(depth);
  const std::size_t pairs = n - 1;
  for (std::size_t step = 0; step + 1 < pairs + depth; ++step) {
    for (std::size_t l = 0; l < depth && l <= step; ++l) {
      const std::size_t k = step - l;
      if (k >= pairs) continue;
      TwoQubitGate g = pair_disentangler(state, n, k);
      apply_gate_transpose(state, n, g);
      layers[l].gates.push_back(std::move(g));
    }
  }
  for (auto& layer : layers) std::reverse(layer.gates.begin(), layer.gates.end());

  // Replay layer by layer for the per-layer residual distances.
  r.report.per_layer_discarded.assign(depth, 0.0);
  std::vector<double> replay = mps_to_vector(dec.mps);
  for (double& x : replay) x /= dec.mps.norm;
  for (std::size_t l = 0; l < depth; ++l) {
    for (auto g = layers[l].gates.rbegin(); g != layers[l].gates.rend(); ++g) {
      apply_gate_transpose(replay, n, *g);
    }
    r.report.per_layer_discarded[l] = distance_from_origin(replay);
  }

  r.circuit = detail::assemble(data, layers);
  detail::finalize(data, r);
  r.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::size_t> amlet_bond_caps(std::size_t num_qubits,
                                         std::size_t depth) {
  if (num_qubits < 2) throw InvalidArgument("at least two qubits are required");
  if (depth == 0) throw InvalidArgument("depth must be at least 1");
  std::vector<std::size_t> caps;
  for (std::size_t i = 0; i + 1 < num_qubits; ++i) {
    const std::size_t e = std::min({depth, i + 1, num_qubits - 1 - i});
    caps.push_back(std::size_t{1} << e);
  }
  return caps;
}

std::size_t amlet_saturation_depth(std::size_t num_qubits) {
  return std::max<std::size_t>(1, num_qubits / 2);
}

TwoQubitGate pair_disentangler(std::span<const double> state,
                               std::size_t num_qubits, std::size_t qubit,
                               std::vector<double>* singular_values) {
  if (num_qubits < 2 || qubit + 1 >= num_qubits ||
      state.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("pair outside the register");
  }
  const std::size_t low = std::size_t{1} << (num_qubits - qubit - 2);
  const std::size_t high = std::size_t{1} << qubit;
  Eigen::MatrixXd unfolded(4, static_cast<Eigen::Index>(high * low));
  for (std::size_t h = 0; h < high; ++h) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t l = 0; l < low; ++l) {
        unfolded(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(h * low + l)) =
            state[h * 4 * low + r * low + l];
      }
    }
  }
  Eigen::Matrix4d basis = left_singular_basis(unfolded, singular_values);
  if (basis.determinant() < 0.0) basis.col(3) = -basis.col(3);
  return {qubit, basis};
}

CompileResult compile_amlet(const DataVector& data, const StopRule& rule) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_compilable(data);
  if (const auto* fixed = std::get_if<FixedDepth>(&rule)) {
    if (fixed->depth == 0) throw InvalidArgument("depth must be at least 1");
    return compile_fixed(data, fixed->depth, start);
  }
  const auto& target = std::get<TargetError>(rule);
  if (target.depth_cap == 0) throw InvalidArgument("depth cap must be at least 1");
  const std::size_t n = data.num_qubits;
  const std::size_t saturation = amlet_saturation_depth(n);

  std::size_t best_depth = 1;
  double best_value = INFINITY;
  auto consider = [&](std::size_t depth, double value) {
    if (value < best_value) {
      best_value = value;
      best_depth = depth;
    }
  };

  // Below saturation the bond caps change with depth, so every depth is an
  // independent compilation.
  const std::size_t independent = std::min(target.depth_cap, saturation - 1);
  for (std::size_t depth = 1; depth <= independent; ++depth) {
    CompileResult r = compile_fixed(data, depth, start);
    const double value = r.report.measured.value(target.metric);
    consider(depth, value);
    if (value <= target.threshold) return r;
  }

  // From saturation on the capped state equals the input and the circuits are
  // nested, so depths are scanned by appending layers.
  if (target.depth_cap >= saturation) {
    detail::ResidualTracker tracker(data);
    std::vector<double> state = detail::unit_vector(data);
    for (std::size_t depth = 1; depth <= target.depth_cap; ++depth) {
      tracker.push(dense_layer(state, n));
      if (depth < saturation) continue;
      const double value = tracker.metrics().value(target.metric);
      consider(depth, value);
      if (value <= target.threshold) {
        CompileResult r = compile_fixed(data, depth, start);
        if (r.report.measured.value(target.metric) <= target.threshold) return r;
      }
    }
  }
  throw BudgetExceeded(compile_fixed(data, best_depth, start));
}

}  // namespace tnload
