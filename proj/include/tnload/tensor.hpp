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

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tnload {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Row-major dense tensor of doubles.
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(std::vector<std::size_t> shape, std::vector<double> data,
              std::vector<std::string> labels = {});

  static DenseTensor zeros(std::vector<std::size_t> shape);
  static DenseTensor from_matrix(const Eigen::MatrixXd& m);

  std::size_t rank() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  double at(std::span<const std::size_t> index) const;
  double& at(std::span<const std::size_t> index);
  double at(std::initializer_list<std::size_t> index) const;
  double& at(std::initializer_list<std::size_t> index);

  // Rank-2 only.
  Eigen::MatrixXd to_matrix() const;
  DenseTensor reshaped(std::vector<std::size_t> shape) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
  std::vector<std::string> labels_;
};

DenseTensor permute(const DenseTensor& t, std::span<const std::size_t> order);

// Every axis must appear in exactly one group; groups are placed in the given
// order and the axes inside a group keep their listed order.
DenseTensor fuse_indices(const DenseTensor& t,
                         const std::vector<std::vector<std::size_t>>& groups);

DenseTensor split_index(const DenseTensor& t, std::size_t axis,
                        std::span<const std::size_t> factors);

struct SvdResult {
  DenseTensor left;                     // rows x k, orthonormal columns
  std::vector<double> singular_values;  // descending, length k
  DenseTensor right;                    // k x cols, orthonormal rows
  double discarded_weight = 0.0;        // sqrt of the sum of dropped sigma^2
};

// Keeps the max_rank largest singular values. In every kept left vector the
// entry of largest magnitude (lowest index on ties) is non-negative.
SvdResult svd_truncate(const DenseTensor& matrix, std::size_t max_rank);

// Full orthonormal basis of the column space of m (rows <= cols not
// required), ordered by descending singular value with the same sign
// convention as svd_truncate. Columns beyond the rank of m are completed.
Eigen::MatrixXd left_singular_basis(const Eigen::MatrixXd& m,
                                    std::vector<double>* singular_values =
                                        nullptr);

// partial holds k <= q orthonormal columns of length q; the result is a q x q
// orthogonal matrix whose first k columns equal the input.
DenseTensor nullspace_complete(const DenseTensor& partial);
Eigen::MatrixXd nullspace_complete(const Eigen::MatrixXd& partial);

}  // namespace tnload
