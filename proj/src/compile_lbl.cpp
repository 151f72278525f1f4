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

#include "tnload/compile_lbl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "compile_internal.hpp"
#include "tnload/errors.hpp"
#include "tnload/simulate.hpp"

namespace tnload {

namespace {

// Columns G[(a, s), b] = A[a, s, b] of a site with both bonds at most 2.
Eigen::MatrixXd site_columns(const DenseTensor& site) {
  const std::size_t chi_l = site.dim(0);
  const std::size_t chi_r = site.dim(2);
  if (chi_l > 2 || chi_r > 2) throw NumericalFailure("bond dimension above 2");
  Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(4, static_cast<Eigen::Index>(chi_r));
  for (std::size_t a = 0; a < chi_l; ++a) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t b = 0; b < chi_r; ++b) {
        cols(static_cast<Eigen::Index>(a * 2 + s), static_cast<Eigen::Index>(b)) =
            site.at({a, s, b});
      }
    }
  }
  return cols;
}

struct LayerInfo {
  std::vector<BondTruncation> bonds;
  double canonical_deviation = 0.0;
};

}  // namespace

LayerResult disentangle_layer(std::span<const double> state) {
  const std::size_t n = qubit_count(state.size());
  if (n < 2) throw InvalidArgument("at least two qubits are required");
  LayerResult out;
  out.mps = vector_to_mps(state, 2);
  const auto& sites = out.mps.mps.sites;
  for (double d : check_left_canonical(out.mps.mps)) {
    out.canonical_deviation = std::max(out.canonical_deviation, d);
  }

  for (std::size_t i = n - 1; i >= 1; --i) {
    Eigen::Matrix4d g = complete_to_so4(site_columns(sites[i]));
    if (i == 1) {
      const DenseTensor& first = sites[0];
      Eigen::MatrixXd top(2, static_cast<Eigen::Index>(first.dim(2)));
      for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t b = 0; b < first.dim(2); ++b) {
          top(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(b)) =
              first.at({0, s, b});
        }
      }
      const Eigen::Matrix2d g0 = nullspace_complete(top);
      Eigen::Matrix4d lift = Eigen::Matrix4d::Zero();
      lift.block<2, 2>(0, 0) = g0(0, 0) * Eigen::Matrix2d::Identity();
      lift.block<2, 2>(0, 2) = g0(0, 1) * Eigen::Matrix2d::Identity();
      lift.block<2, 2>(2, 0) = g0(1, 0) * Eigen::Matrix2d::Identity();
      lift.block<2, 2>(2, 2) = g0(1, 1) * Eigen::Matrix2d::Identity();
      g = lift * g;
    }
    out.layer.gates.push_back({i - 1, g});
  }

  out.residual.assign(state.begin(), state.end());
  for (auto g = out.layer.gates.rbegin(); g != out.layer.gates.rend(); ++g) {
    apply_gate_transpose(out.residual, n, *g);
  }
  return out;
}

CompileResult compile_lbl(const DataVector& data, const StopRule& rule) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_compilable(data);
  const std::size_t n = data.num_qubits;
  const auto* fixed = std::get_if<FixedDepth>(&rule);
  const auto* target = std::get_if<TargetError>(&rule);
  const std::size_t max_depth = fixed ? fixed->depth : target->depth_cap;
  if (max_depth == 0) throw InvalidArgument("depth must be at least 1");

  detail::ResidualTracker tracker(data);
  std::vector<Layer> layers;
  std::vector<LayerInfo> infos;

  auto build = [&](std::size_t depth) {
    CompileResult r;
    r.circuit = detail::assemble(
        data, std::vector<Layer>(layers.begin(),
                                 layers.begin() + static_cast<std::ptrdiff_t>(depth)));
    r.report.algorithm = Algorithm::Lbl;
    for (std::size_t k = 0; k < depth; ++k) {
      double sum = 0.0;
      for (const auto& b : infos[k].bonds) {
        sum += b.discarded_weight * b.discarded_weight;
        if (b.discarded_weight > detail::kTruncationTol) {
          r.report.truncation_events.push_back(
              {k * (n - 1) + b.cut, k + 1, b.cut, b.discarded_weight});
        }
      }
      r.report.per_layer_discarded.push_back(std::sqrt(sum));
      r.report.max_canonical_deviation =
          std::max(r.report.max_canonical_deviation, infos[k].canonical_deviation);
    }
    detail::finalize(data, r);
    r.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  std::size_t best_depth = 0;
  double best_value = INFINITY;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<double> state = tracker.residual();
    double norm = 0.0;
    for (double x : state) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : state) x /= norm;
    LayerResult lr = disentangle_layer(state);
    layers.push_back(std::move(lr.layer));
    infos.push_back({std::move(lr.mps.bonds), lr.canonical_deviation});
    tracker.push(layers.back());
    if (target) {
      const double value = tracker.metrics().value(target->metric);
      if (value < best_value) {
        best_value = value;
        best_depth = depth;
      }
      if (value <= target->threshold) {
        CompileResult r = build(depth);
        if (r.report.measured.value(target->metric) <= target->threshold) return r;
      }
    }
  }
  if (fixed) return build(max_depth);
  throw BudgetExceeded(build(best_depth));
}

}  // namespace tnload
