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

// Reference implementations used to check the library. They favour the most
// direct formulation over speed.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "tnload/circuit.hpp"

namespace oracle {

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// I_{2^q} (x) G (x) I_{2^{n-q-2}}
inline Eigen::MatrixXd embed(const tnload::TwoQubitGate& g, std::size_t n) {
  const auto high = Eigen::Index{1} << g.qubit;
  const auto low = Eigen::Index{1} << (n - g.qubit - 2);
  return kron(kron(Eigen::MatrixXd::Identity(high, high), g.matrix),
              Eigen::MatrixXd::Identity(low, low));
}

inline Eigen::MatrixXd circuit_matrix(const tnload::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.num_qubits;
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(dim, dim);
  for (const auto& layer : c.layers) {
    for (const auto& g : layer.gates) u = embed(g, c.num_qubits) * u;
  }
  return u;
}

inline Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows,
                                       Eigen::Index cols) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  }
  return m;
}

inline Eigen::Matrix4d random_so4(std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(rng, 4, 4));
  Eigen::Matrix4d q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

inline tnload::Circuit random_circuit(std::mt19937_64& rng, std::size_t n,
                                      std::size_t depth) {
  tnload::Circuit c;
  c.num_qubits = n;
  for (std::size_t d = 0; d < depth; ++d) {
    tnload::Layer layer;
    for (std::size_t q = n - 1; q-- > 0;) layer.gates.push_back({q, random_so4(rng)});
    c.layers.push_back(layer);
  }
  return c;
}

inline double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline double norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

}  // namespace oracle
