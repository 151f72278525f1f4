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

#include <vector>

#include "tnload/compile.hpp"

namespace tnload::detail {

inline constexpr double kTruncationTol = 1e-12;

void require_compilable(const DataVector& data);
std::vector<double> unit_vector(const DataVector& data);

// Layers are given in disentangling order; the circuit applies them reversed.
Circuit assemble(const DataVector& data, const std::vector<Layer>& layers);

// Simulates the circuit, folds a global sign into it when the prepared state
// anticorrelates with the data, and fills report.measured.
void finalize(const DataVector& data, CompileResult& result);

// Tracks U^T v and U^T 1 under the inverse of a growing circuit U, which
// yields the metrics of U|0> without simulating it.
class ResidualTracker {
 public:
  explicit ResidualTracker(const DataVector& data);

  void push(const Layer& disentangling_layer);
  const std::vector<double>& residual() const { return residual_; }
  Metrics metrics() const;

 private:
  const DataVector& data_;
  std::vector<double> residual_;
  std::vector<double> ones_;
};

}  // namespace tnload::detail
