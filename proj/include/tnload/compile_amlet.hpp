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

#include <span>
#include <vector>

#include "tnload/compile.hpp"

namespace tnload {

// Bond cap 2^min(depth, i + 1, n - 1 - i) at cut i: the largest bond a
// depth-D staircase can create across that cut.
std::vector<std::size_t> amlet_bond_caps(std::size_t num_qubits,
                                         std::size_t depth);

// Orthogonal gate on (qubit, qubit + 1) whose columns are the left singular
// vectors of the state unfolded with that pair as rows, strongest first.
// singular_values receives the four singular values when non-null.
TwoQubitGate pair_disentangler(std::span<const double> state,
                               std::size_t num_qubits, std::size_t qubit,
                               std::vector<double>* singular_values = nullptr);

// The number of layers at which the bond caps stop binding, floor(n / 2).
std::size_t amlet_saturation_depth(std::size_t num_qubits);

CompileResult compile_amlet(const DataVector& data, const StopRule& rule);

}  // namespace tnload
