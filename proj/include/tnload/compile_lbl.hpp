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
#include "tnload/mps.hpp"

namespace tnload {

struct LayerResult {
  Layer layer;                   // application order
  std::vector<double> residual;  // layer^T applied to the input state
  MpsDecomposition mps;          // bond-2 decomposition the layer came from
  double canonical_deviation = 0.0;
};

// One staircase layer from the bond-2 truncation of a unit-norm state.
LayerResult disentangle_layer(std::span<const double> state);

CompileResult compile_lbl(const DataVector& data, const StopRule& rule);

}  // namespace tnload
