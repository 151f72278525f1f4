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

#include <cmath>

#include "tnload/data.hpp"
#include "tnload/errors.hpp"

namespace tnload {

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::L2:
      return "l2";
    case MetricKind::Momentum:
      return "momentum";
    case MetricKind::Rmsd:
      return "rmsd";
  }
  return "l2";
}

MetricKind metric_from_string(const std::string& name) {
  if (name == "l2") return MetricKind::L2;
  if (name == "momentum") return MetricKind::Momentum;
  if (name == "rmsd") return MetricKind::Rmsd;
  throw InvalidArgument("unknown metric: " + name);
}

double default_threshold(MetricKind kind) {
  switch (kind) {
    case MetricKind::L2:
      return 1e-3;
    case MetricKind::Momentum:
      return 100.0;
    case MetricKind::Rmsd:
      return 1.0;
  }
  return 1e-3;
}

DataVector make_data_vector(std::vector<double> values, std::size_t num_qubits,
                            MetricKind metric, std::string provenance) {
  if (values.empty()) throw InvalidArgument("empty data vector");
  if (num_qubits == 0) {
    num_qubits = 1;
    while ((std::size_t{1} << num_qubits) < values.size()) ++num_qubits;
  }
  if (num_qubits >= 8 * sizeof(std::size_t) - 1) {
    throw InvalidArgument("register too large");
  }
  const std::size_t length = std::size_t{1} << num_qubits;
  if (values.size() > length) {
    throw InvalidArgument("data does not fit in the register");
  }
  DataVector d;
  d.original_length = values.size();
  values.resize(length, 0.0);
  double sum = 0.0;
  for (double x : values) {
    if (!std::isfinite(x)) throw InvalidArgument("data is not finite");
    sum += x * x;
  }
  d.values = std::move(values);
  d.num_qubits = num_qubits;
  d.norm = std::sqrt(sum);
  d.metric = metric;
  d.provenance = std::move(provenance);
  return d;
}

double Metrics::value(MetricKind kind) const {
  switch (kind) {
    case MetricKind::L2:
      return eps_l2;
    case MetricKind::Momentum:
      return eps_momentum;
    case MetricKind::Rmsd:
      if (!eps_rmsd) throw InvalidArgument("rmsd requires an atom count");
      return *eps_rmsd;
  }
  return eps_l2;
}

Metrics compute_metrics(const DataVector& data, std::span<const double> approx) {
  if (approx.size() != data.values.size()) {
    throw InvalidArgument("reconstruction length does not match data");
  }
  Metrics m;
  double diff = 0.0;
  double dot = 0.0;
  double approx_sq = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double d = data.values[i] - approx[i];
    diff += d * d;
    dot += data.values[i] * approx[i];
    approx_sq += approx[i] * approx[i];
  }
  m.eps_l2 = std::sqrt(diff);
  double exact_sum = 0.0;
  double approx_sum = 0.0;
  for (std::size_t i = 0; i < data.original_length; ++i) {
    exact_sum += data.values[i];
    approx_sum += approx[i];
  }
  m.eps_momentum = std::abs(exact_sum - approx_sum);
  if (data.atom_count && *data.atom_count > 0) {
    m.eps_rmsd = m.eps_l2 / std::sqrt(static_cast<double>(*data.atom_count));
  }
  const double denom = data.norm * std::sqrt(approx_sq);
  m.fidelity = denom > 0.0 ? (dot / denom) * (dot / denom) : 0.0;
  return m;
}

}  // namespace tnload
