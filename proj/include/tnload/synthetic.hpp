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

#include <cstdint>
#include <string>
#include <vector>

#include "tnload/data.hpp"

namespace tnload {

std::vector<double> basis_state(std::size_t num_qubits, std::size_t index);
std::vector<double> ghz_state(std::size_t num_qubits);
// Standard normal entries from a seeded mt19937_64.
std::vector<double> random_vector(std::size_t num_qubits, std::uint64_t seed);

// Smooth and piecewise-smooth profiles sampled on 2^n points of [-1, 1].
std::vector<std::string> structured_names();
std::vector<double> structured_profile(const std::string& name,
                                       std::size_t num_qubits);
std::vector<DataVector> structured_corpus(std::size_t num_qubits);

// name is one of basis, ghz, random or a structured profile name.
DataVector synthetic_vector(const std::string& name, std::size_t num_qubits,
                            std::uint64_t seed);

}  // namespace tnload
