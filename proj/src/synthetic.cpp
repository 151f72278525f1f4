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

#include "tnload/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "tnload/errors.hpp"

namespace tnload {

namespace {

std::size_t length_of(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > 30) {
    throw InvalidArgument("qubit count out of range");
  }
  return std::size_t{1} << num_qubits;
}

double gauss(double x, double mu, double sigma) {
  return std::exp(-(x - mu) * (x - mu) / (2.0 * sigma * sigma));
}

}  // namespace

std::vector<double> basis_state(std::size_t num_qubits, std::size_t index) {
  std::vector<double> v(length_of(num_qubits), 0.0);
  if (index >= v.size()) throw InvalidArgument("basis index out of range");
  v[index] = 1.0;
  return v;
}

std::vector<double> ghz_state(std::size_t num_qubits) {
  std::vector<double> v(length_of(num_qubits), 0.0);
  v.front() = v.back() = 1.0 / std::sqrt(2.0);
  return v;
}

std::vector<double> random_vector(std::size_t num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(length_of(num_qubits));
  for (double& x : v) x = normal(rng);
  return v;
}

std::vector<std::string> structured_names() {
  return {"gaussian",  "bimodal",        "sine",
          "sine_mix",  "piecewise_quad", "piecewise_abs"};
}

std::vector<double> structured_profile(const std::string& name,
                                       std::size_t num_qubits) {
  const std::size_t len = length_of(num_qubits);
  const double pi = std::numbers::pi;
  std::vector<double> v(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double x = len == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) /
                                             static_cast<double>(len - 1);
    if (name == "gaussian") {
      v[i] = gauss(x, 0.0, 0.2);
    } else if (name == "bimodal") {
      v[i] = gauss(x, 0.3, 0.1) + 0.5 * gauss(x, -0.4, 0.25);
    } else if (name == "sine") {
      v[i] = std::sin(3.0 * pi * x) + 1.5;
    } else if (name == "sine_mix") {
      v[i] = std::sin(5.0 * x) * std::cos(2.0 * x) + 2.0;
    } else if (name == "piecewise_quad") {
      v[i] = x < 0.2 ? 1.0 + x * x : 2.0 - x;
    } else if (name == "piecewise_abs") {
      v[i] = std::abs(x) + (x > 0.0 ? 0.5 : 0.0) + 1.0;
    } else {
      throw InvalidArgument("unknown profile: " + name);
    }
  }
  return v;
}

std::vector<DataVector> structured_corpus(std::size_t num_qubits) {
  std::vector<DataVector> out;
  for (const auto& name : structured_names()) {
    out.push_back(make_data_vector(structured_profile(name, num_qubits),
                                   num_qubits, MetricKind::L2,
                                   name + "_n" + std::to_string(num_qubits)));
  }
  return out;
}

DataVector synthetic_vector(const std::string& name, std::size_t num_qubits,
                            std::uint64_t seed) {
  std::vector<double> v;
  if (name == "basis") {
    v = basis_state(num_qubits, static_cast<std::size_t>(seed % length_of(num_qubits)));
  } else if (name == "ghz") {
    v = ghz_state(num_qubits);
  } else if (name == "random") {
    v = random_vector(num_qubits, seed);
  } else {
    v = structured_profile(name, num_qubits);
  }
  return make_data_vector(std::move(v), num_qubits, MetricKind::L2,
                          name + "_n" + std::to_string(num_qubits));
}

}  // namespace tnload
