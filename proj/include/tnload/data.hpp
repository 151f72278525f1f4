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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tnload {

enum class MetricKind { L2, Momentum, Rmsd };

std::string to_string(MetricKind kind);
MetricKind metric_from_string(const std::string& name);
double default_threshold(MetricKind kind);

struct DataVector {
  std::vector<double> values;  // zero-padded to 2^n
  std::size_t num_qubits = 0;
  std::size_t original_length = 0;
  double norm = 0.0;
  MetricKind metric = MetricKind::L2;
  std::optional<std::size_t> atom_count;
  std::string provenance;
};

// Pads values with zeros to 2^num_qubits. num_qubits == 0 picks the smallest
// register that fits (at least one qubit).
DataVector make_data_vector(std::vector<double> values, std::size_t num_qubits,
                            MetricKind metric, std::string provenance);

struct Metrics {
  double eps_l2 = 0.0;
  double eps_momentum = 0.0;
  std::optional<double> eps_rmsd;
  double fidelity = 0.0;

  double value(MetricKind kind) const;
};

// approx is the unnormalised reconstruction, i.e. stored norm times state.
Metrics compute_metrics(const DataVector& data, std::span<const double> approx);

}  // namespace tnload
