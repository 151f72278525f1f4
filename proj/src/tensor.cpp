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

#include "tnload/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "tnload/errors.hpp"

namespace tnload {

namespace {

constexpr double kZeroSingular = 1e-13;
constexpr double kOrthonormalTol = 1e-8;

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * shape[i];
  }
  return strides;
}

void flip_to_convention(Eigen::Ref<Eigen::VectorXd> col) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) > best_abs) {
      best_abs = std::abs(col(i));
      best = i;
    }
  }
  if (col(best) < 0.0) col = -col;
}

// Appends canonical-basis directions (largest residual first) until q has
// target columns. The existing columns of q must be orthonormal.
Eigen::MatrixXd complete_columns(const Eigen::MatrixXd& q,
                                 Eigen::Index target) {
  const Eigen::Index rows = q.rows();
  Eigen::MatrixXd out(rows, target);
  out.leftCols(q.cols()) = q;
  for (Eigen::Index k = q.cols(); k < target; ++k) {
    auto basis = out.leftCols(k);
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double residual = 1.0 - basis.row(i).squaredNorm();
      if (residual > best + 1e-12) {
        best = residual;
        pivot = i;
      }
    }
    Eigen::VectorXd v = -basis * basis.row(pivot).transpose();
    v(pivot) += 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      v -= basis * (basis.transpose() * v);
      const double norm = v.norm();
      if (norm < 1e-10) {
        throw NumericalFailure("nullspace completion lost orthogonality");
      }
      v /= norm;
    }
    flip_to_convention(v);
    out.col(k) = v;
  }
  return out;
}

void require_orthonormal_columns(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return;
  const Eigen::MatrixXd gram = m.transpose() * m;
  const double dev =
      (gram - Eigen::MatrixXd::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
  if (!(dev <= kOrthonormalTol)) {
    throw InvalidArgument("columns are not orthonormal");
  }
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape,
                         std::vector<double> data,
                         std::vector<std::string> labels)
    : shape_(std::move(shape)),
      data_(std::move(data)),
      labels_(std::move(labels)) {
  if (product(shape_) != data_.size()) {
    throw InvalidArgument("tensor data does not match shape");
  }
  if (!labels_.empty() && labels_.size() != shape_.size()) {
    throw InvalidArgument("tensor labels do not match rank");
  }
}

DenseTensor DenseTensor::zeros(std::vector<std::size_t> shape) {
  const std::size_t n = product(shape);
  return DenseTensor(std::move(shape), std::vector<double>(n, 0.0));
}

DenseTensor DenseTensor::from_matrix(const Eigen::MatrixXd& m) {
  std::vector<double> data(static_cast<std::size_t>(m.size()));
  Eigen::Map<RowMatrix>(data.data(), m.rows(), m.cols()) = m;
  return DenseTensor({static_cast<std::size_t>(m.rows()),
                      static_cast<std::size_t>(m.cols())},
                     std::move(data));
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) {
    throw InvalidArgument("index rank does not match tensor rank");
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i]) throw InvalidArgument("index out of range");
    flat = flat * shape_[i] + index[i];
  }
  return flat;
}

double DenseTensor::at(std::span<const std::size_t> index) const {
  return data_[flat_index(index)];
}

double& DenseTensor::at(std::span<const std::size_t> index) {
  return data_[flat_index(index)];
}

double DenseTensor::at(std::initializer_list<std::size_t> index) const {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

double& DenseTensor::at(std::initializer_list<std::size_t> index) {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

Eigen::MatrixXd DenseTensor::to_matrix() const {
  if (rank() != 2) throw InvalidArgument("to_matrix requires a rank-2 tensor");
  return Eigen::Map<const RowMatrix>(data_.data(),
                                     static_cast<Eigen::Index>(shape_[0]),
                                     static_cast<Eigen::Index>(shape_[1]));
}

DenseTensor DenseTensor::reshaped(std::vector<std::size_t> shape) const {
  return DenseTensor(std::move(shape), data_);
}

DenseTensor permute(const DenseTensor& t, std::span<const std::size_t> order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(r, false);
  for (std::size_t axis : order) {
    if (axis >= r || seen[axis]) throw InvalidArgument("not a permutation");
    seen[axis] = true;
  }
  std::vector<std::size_t> new_shape(r);
  std::vector<std::string> new_labels;
  for (std::size_t i = 0; i < r; ++i) new_shape[i] = t.shape()[order[i]];
  if (!t.labels().empty()) {
    for (std::size_t axis : order) new_labels.push_back(t.labels()[axis]);
  }
  const auto old_strides = strides_of(t.shape());
  std::vector<std::size_t> gather(r);
  for (std::size_t i = 0; i < r; ++i) gather[i] = old_strides[order[i]];

  std::vector<double> out(t.size());
  std::vector<std::size_t> counter(r, 0);
  std::size_t src = 0;
  for (std::size_t dst = 0; dst < out.size(); ++dst) {
    out[dst] = t.data()[src];
    for (std::size_t i = r; i-- > 0;) {
      if (++counter[i] < new_shape[i]) {
        src += gather[i];
        break;
      }
      src -= gather[i] * (new_shape[i] - 1);
      counter[i] = 0;
    }
  }
  return DenseTensor(std::move(new_shape), std::move(out),
                     std::move(new_labels));
}

DenseTensor fuse_indices(const DenseTensor& t,
                         const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> new_shape;
  for (const auto& group : groups) {
    if (group.empty()) throw InvalidArgument("empty index group");
    std::size_t dim = 1;
    for (std::size_t axis : group) {
      if (axis >= t.rank()) throw InvalidArgument("index group out of range");
      order.push_back(axis);
      dim *= t.shape()[axis];
    }
    new_shape.push_back(dim);
  }
  if (order.size() != t.rank()) {
    throw InvalidArgument("index groups must cover every axis once");
  }
  DenseTensor p = permute(t, order);
  return DenseTensor(std::move(new_shape), std::move(p.data()));
}

DenseTensor split_index(const DenseTensor& t, std::size_t axis,
                        std::span<const std::size_t> factors) {
  if (axis >= t.rank()) throw InvalidArgument("axis out of range");
  if (factors.empty() || product(factors) != t.shape()[axis]) {
    throw InvalidArgument("split factors do not multiply to the axis size");
  }
  std::vector<std::size_t> new_shape;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (i == axis) {
      new_shape.insert(new_shape.end(), factors.begin(), factors.end());
    } else {
      new_shape.push_back(t.shape()[i]);
    }
  }
  return DenseTensor(std::move(new_shape), t.data());
}

SvdResult svd_truncate(const DenseTensor& matrix, std::size_t max_rank) {
  if (matrix.rank() != 2) throw InvalidArgument("svd requires a matrix");
  if (max_rank == 0) throw InvalidArgument("svd rank must be at least 1");
  if (matrix.size() == 0) throw InvalidArgument("svd of an empty matrix");
  for (double x : matrix.data()) {
    if (!std::isfinite(x)) throw NumericalFailure("svd input is not finite");
  }
  const Eigen::MatrixXd m = matrix.to_matrix();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalFailure("svd did not converge");

  const Eigen::VectorXd& sigma = svd.singularValues();
  const Eigen::Index full = sigma.size();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(full));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return sigma(a) > sigma(b);
  });
  const Eigen::Index k = std::min<Eigen::Index>(
      static_cast<Eigen::Index>(max_rank), full);

  double tail = 0.0;
  for (Eigen::Index j = k; j < full; ++j) {
    tail += sigma(idx[j]) * sigma(idx[j]);
  }

  const double scale = full > 0 ? sigma(idx[0]) : 0.0;
  Eigen::Index live = 0;
  while (live < k && sigma(idx[live]) > kZeroSingular * scale &&
         sigma(idx[live]) > 0.0) {
    ++live;
  }
  Eigen::MatrixXd u(m.rows(), live);
  Eigen::MatrixXd v(m.cols(), live);
  std::vector<double> values(static_cast<std::size_t>(k), 0.0);
  for (Eigen::Index j = 0; j < live; ++j) {
    u.col(j) = svd.matrixU().col(idx[j]);
    v.col(j) = svd.matrixV().col(idx[j]);
    values[j] = sigma(idx[j]);
  }
  for (Eigen::Index j = live; j < k; ++j) values[j] = sigma(idx[j]);
  if (!u.allFinite() || !v.allFinite()) {
    throw NumericalFailure("svd produced non-finite vectors");
  }
  for (Eigen::Index j = 0; j < live; ++j) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < u.rows(); ++i) {
      if (std::abs(u(i, j)) > std::abs(u(best, j))) best = i;
    }
    if (u(best, j) < 0.0) {
      u.col(j) = -u.col(j);
      v.col(j) = -v.col(j);
    }
  }
  if (live < k) {
    u = complete_columns(u, k);
    v = complete_columns(v, k);
  }

  SvdResult out;
  out.left = DenseTensor::from_matrix(u);
  out.right = DenseTensor::from_matrix(v.transpose());
  out.singular_values = std::move(values);
  out.discarded_weight = std::sqrt(tail);
  return out;
}

Eigen::MatrixXd left_singular_basis(const Eigen::MatrixXd& m,
                                    std::vector<double>* singular_values) {
  if (m.rows() == 0) throw InvalidArgument("empty matrix");
  const Eigen::Index q = m.rows();
  std::vector<double> values(static_cast<std::size_t>(q), 0.0);
  Eigen::MatrixXd u(q, 0);
  if (m.cols() > 0) {
    if (!m.allFinite()) throw NumericalFailure("svd input is not finite");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    if (svd.info() != Eigen::Success) {
      throw NumericalFailure("svd did not converge");
    }
    const Eigen::VectorXd& sigma = svd.singularValues();
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(sigma.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return sigma(a) > sigma(b);
                     });
    const double scale = sigma.size() > 0 ? sigma(idx[0]) : 0.0;
    Eigen::Index live = 0;
    while (live < sigma.size() && sigma(idx[live]) > kZeroSingular * scale &&
           sigma(idx[live]) > 0.0) {
      ++live;
    }
    u.resize(q, live);
    for (Eigen::Index j = 0; j < live; ++j) {
      u.col(j) = svd.matrixU().col(idx[j]);
      flip_to_convention(u.col(j));
    }
    for (Eigen::Index j = 0; j < sigma.size(); ++j) values[j] = sigma(idx[j]);
  }
  if (singular_values != nullptr) *singular_values = std::move(values);
  return complete_columns(u, q);
}

Eigen::MatrixXd nullspace_complete(const Eigen::MatrixXd& partial) {
  const Eigen::Index q = partial.rows();
  if (q == 0) throw InvalidArgument("empty basis");
  if (partial.cols() > q) throw InvalidArgument("more columns than rows");
  if (!partial.allFinite()) throw InvalidArgument("basis is not finite");
  require_orthonormal_columns(partial);
  if (partial.cols() == q) return partial;
  return complete_columns(partial, q);
}

DenseTensor nullspace_complete(const DenseTensor& partial) {
  return DenseTensor::from_matrix(nullspace_complete(partial.to_matrix()));
}

}  // namespace tnload
