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
#include <span>
#include <vector>

#include "tnload/tensor.hpp"

namespace tnload {

// Site tensors have shape [chi_left, 2, chi_right] with chi_left of the first
// site and chi_right of the last site equal to 1. The contraction of the sites
// has unit norm and norm carries the scale of the represented vector.
struct MatrixProductState {
  std::vector<DenseTensor> sites;
  double norm = 0.0;
  bool left_canonical = false;

  std::size_t num_sites() const { return sites.size(); }
  // Bond dimension at each of the num_sites() - 1 cuts.
  std::vector<std::size_t> bond_dimensions() const;
};

struct BondTruncation {
  std::size_t cut = 0;      // bond between site cut and site cut + 1
  std::size_t kept = 0;
  double discarded_weight = 0.0;  // in the units of the input vector
};

struct MpsDecomposition {
  MatrixProductState mps;
  std::vector<BondTruncation> bonds;

  double total_discarded_weight() const;
};

// Left-to-right sweep of successive SVDs, truncating each bond to chi_max.
MpsDecomposition vector_to_mps(std::span<const double> v, std::size_t chi_max);

// Same sweep with an individual cap for each of the n - 1 cuts.
MpsDecomposition vector_to_mps(std::span<const double> v,
                               std::span<const std::size_t> bond_caps);

std::vector<double> mps_to_vector(const MatrixProductState& mps);

// Per-site max |sum_{a,s} A[a,s,b] A[a,s,b'] - delta_{b,b'}|.
std::vector<double> check_left_canonical(const MatrixProductState& mps);

std::size_t qubit_count(std::size_t length);

}  // namespace tnload
