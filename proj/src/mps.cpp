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

#include "tnload/mps.hpp"

#include <cmath>

#include "tnload/errors.hpp"

namespace tnload {

namespace {

constexpr double kSchmidtZero = 1e-13;

}  // namespace

std::size_t qubit_count(std::size_t length) {
  if (length < 2 || (length & (length - 1)) != 0) {
    throw InvalidArgument("vector length must be a power of two, at least 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < length) ++n;
  return n;
}

std::vector<std::size_t> MatrixProductState::bond_dimensions() const {
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i + 1 < sites.size(); ++i) {
    dims.push_back(sites[i].dim(2));
  }
  return dims;
}

double MpsDecomposition::total_discarded_weight() const {
  double sum = 0.0;
  for (const auto& b : bonds) sum += b.discarded_weight * b.discarded_weight;
  return std::sqrt(sum);
}

MpsDecomposition vector_to_mps(std::span<const double> v, std::size_t chi_max) {
  const std::size_t n = qubit_count(v.size());
  std::vector<std::size_t> caps(n - 1, chi_max);
  return vector_to_mps(v, caps);
}

MpsDecomposition vector_to_mps(std::span<const double> v,
                               std::span<const std::size_t> bond_caps) {
  const std::size_t n = qubit_count(v.size());
  if (bond_caps.size() != n - 1) {
    throw InvalidArgument("one bond cap per cut is required");
  }
  double norm = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument("vector is not finite");
    norm += x * x;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) throw InvalidArgument("cannot decompose the zero vector");

  MpsDecomposition out;
  std::vector<double> rest(v.begin(), v.end());
  for (double& x : rest) x /= norm;
  std::size_t chi = 1;
  for (std::size_t cut = 0; cut + 1 < n; ++cut) {
    const std::size_t rows = chi * 2;
    const std::size_t cols = rest.size() / rows;
    SvdResult svd =
        svd_truncate(DenseTensor({rows, cols}, std::move(rest)), bond_caps[cut]);
    std::size_t kept = 1;
    while (kept < svd.singular_values.size() &&
           svd.singular_values[kept] > kSchmidtZero * svd.singular_values[0]) {
      ++kept;
    }
    if (kept < svd.singular_values.size()) {
      svd.left = DenseTensor::from_matrix(svd.left.to_matrix().leftCols(
          static_cast<Eigen::Index>(kept)));
      svd.right = DenseTensor::from_matrix(svd.right.to_matrix().topRows(
          static_cast<Eigen::Index>(kept)));
    }
    out.mps.sites.push_back(svd.left.reshaped({chi, 2, kept}));
    out.bonds.push_back({cut, kept, svd.discarded_weight * norm});

    rest = std::move(svd.right.data());
    for (std::size_t k = 0; k < kept; ++k) {
      for (std::size_t c = 0; c < cols; ++c) {
        rest[k * cols + c] *= svd.singular_values[k];
      }
    }
    chi = kept;
  }
  double tail = 0.0;
  for (double x : rest) tail += x * x;
  tail = std::sqrt(tail);
  if (!(tail > 0.0)) throw NumericalFailure("truncation removed the whole state");
  for (double& x : rest) x /= tail;
  out.mps.sites.push_back(DenseTensor({chi, 2, 1}, std::move(rest)));
  out.mps.norm = norm * tail;
  out.mps.left_canonical = true;
  return out;
}

std::vector<double> mps_to_vector(const MatrixProductState& mps) {
  if (mps.sites.empty()) throw InvalidArgument("empty matrix product state");
  RowMatrix acc = RowMatrix::Ones(1, 1);
  for (const auto& site : mps.sites) {
    if (site.rank() != 3 || site.dim(1) != 2 ||
        site.dim(0) != static_cast<std::size_t>(acc.cols())) {
      throw InvalidArgument("site tensor shapes do not chain");
    }
    const auto chi_l = static_cast<Eigen::Index>(site.dim(0));
    const auto chi_r = static_cast<Eigen::Index>(site.dim(2));
    Eigen::Map<const RowMatrix> a(site.data().data(), chi_l, 2 * chi_r);
    RowMatrix next = acc * a;
    acc = Eigen::Map<RowMatrix>(next.data(), next.rows() * 2, chi_r);
  }
  if (acc.cols() != 1) throw InvalidArgument("last bond must be trivial");
  std::vector<double> out(static_cast<std::size_t>(acc.rows()));
  for (Eigen::Index i = 0; i < acc.rows(); ++i) out[i] = mps.norm * acc(i, 0);
  return out;
}

std::vector<double> check_left_canonical(const MatrixProductState& mps) {
  std::vector<double> deviations;
  for (const auto& site : mps.sites) {
    if (site.rank() != 3) throw InvalidArgument("site tensor must be rank 3");
    const auto rows = static_cast<Eigen::Index>(site.dim(0) * site.dim(1));
    const auto cols = static_cast<Eigen::Index>(site.dim(2));
    Eigen::Map<const RowMatrix> a(site.data().data(), rows, cols);
    const Eigen::MatrixXd gram = a.transpose() * a;
    deviations.push_back(
        (gram - Eigen::MatrixXd::Identity(cols, cols)).cwiseAbs().maxCoeff());
  }
  return deviations;
}

}  // namespace tnload
