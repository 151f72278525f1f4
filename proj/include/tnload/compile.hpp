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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tnload/circuit.hpp"
#include "tnload/data.hpp"

namespace tnload {

enum class Algorithm { Lbl, Amlet };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

struct FixedDepth {
  std::size_t depth = 1;
};

// Smallest depth whose measured metric is <= threshold.
struct TargetError {
  MetricKind metric = MetricKind::L2;
  double threshold = 1e-3;
  std::size_t depth_cap = 512;
};

using StopRule = std::variant<FixedDepth, TargetError>;

struct TruncationEvent {
  std::size_t svd_index = 0;  // position in the compiler's SVD sequence
  std::size_t layer = 0;      // 1-based
  std::size_t cut = 0;
  double discarded_weight = 0.0;  // relative to the unit-norm input
};

struct CompileReport {
  Algorithm algorithm = Algorithm::Lbl;
  std::size_t depth = 0;
  std::vector<double> per_layer_discarded;
  std::vector<TruncationEvent> truncation_events;
  Metrics measured;
  double max_canonical_deviation = 0.0;
  double elapsed_seconds = 0.0;
};

struct CompileResult {
  Circuit circuit;
  CompileReport report;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(CompileResult best)
      : std::runtime_error("depth cap reached before the target error"),
        best_(std::move(best)) {}

  const CompileResult& best() const { return best_; }

 private:
  CompileResult best_;
};

CompileResult compile(const DataVector& data, Algorithm algorithm,
                      const StopRule& rule);

// Same as compile with a TargetError rule.
CompileResult find_min_depth(const DataVector& data, Algorithm algorithm,
                             MetricKind metric, double threshold,
                             std::size_t depth_cap = 512);

}  // namespace tnload
