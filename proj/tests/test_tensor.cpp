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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tnload/errors.hpp"
#include "tnload/tensor.hpp"

using namespace tnload;

namespace {

DenseTensor random_tensor(std::mt19937_64& rng, std::vector<std::size_t> shape) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  std::normal_distribution<double> normal;
  std::vector<double> data(n);
  for (double& x : data) x = normal(rng);
  return DenseTensor(std::move(shape), std::move(data));
}

}  // namespace

TEST_CASE("tensor indexing is row-major") {
  DenseTensor t({2, 3}, {0, 1, 2, 3, 4, 5});
  CHECK(t.at({1, 0}) == 3);
  CHECK(t.at({0, 2}) == 2);
  CHECK_THROWS_AS(t.at({2, 0}), InvalidArgument);
  CHECK_THROWS_AS(DenseTensor({2, 2}, {1.0}), InvalidArgument);
  const Eigen::MatrixXd m = t.to_matrix();
  CHECK(m(1, 2) == 5);
}

TEST_CASE("permute agrees with direct index mapping and inverts exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t rank = 1 + trial % 4;
    std::vector<std::size_t> shape(rank);
    for (auto& d : shape) d = dim(rng);
    DenseTensor t = random_tensor(rng, shape);
    std::vector<std::size_t> order(rank);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    DenseTensor p = permute(t, order);
    std::vector<std::size_t> idx(rank, 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      std::size_t rem = flat;
      for (std::size_t a = rank; a-- > 0;) {
        idx[a] = rem % shape[a];
        rem /= shape[a];
      }
      std::vector<std::size_t> pidx(rank);
      for (std::size_t a = 0; a < rank; ++a) pidx[a] = idx[order[a]];
      REQUIRE(p.at(pidx) == t.at(idx));
    }

    std::vector<std::size_t> inverse(rank);
    for (std::size_t a = 0; a < rank; ++a) inverse[order[a]] = a;
    CHECK(permute(p, inverse).data() == t.data());
  }
}

TEST_CASE("permute rejects bad orders") {
  DenseTensor t = DenseTensor::zeros({2, 2});
  const std::vector<std::size_t> dup = {0, 0};
  const std::vector<std::size_t> short_order = {0};
  CHECK_THROWS_AS(permute(t, dup), InvalidArgument);
  CHECK_THROWS_AS(permute(t, short_order), InvalidArgument);
}

TEST_CASE("fuse then split is the identity") {
  std::mt19937_64 rng(11);
  DenseTensor t = random_tensor(rng, {2, 3, 2, 5});
  DenseTensor fused = fuse_indices(t, {{0, 1}, {2, 3}});
  CHECK(fused.shape() == std::vector<std::size_t>{6, 10});
  const std::vector<std::size_t> f1 = {2, 3};
  const std::vector<std::size_t> f2 = {2, 5};
  DenseTensor back = split_index(split_index(fused, 1, f2), 0, f1);
  CHECK(back.shape() == t.shape());
  CHECK(back.data() == t.data());

  DenseTensor swapped = fuse_indices(t, {{2, 3}, {0, 1}});
  CHECK(swapped.to_matrix().isApprox(fused.to_matrix().transpose()));
  CHECK_THROWS_AS(fuse_indices(t, {{0, 1}, {2}}), InvalidArgument);
  const std::vector<std::size_t> bad = {4, 2};
  CHECK_THROWS_AS(split_index(fused, 0, bad), InvalidArgument);
}

TEST_CASE("svd of diag(3, 2) truncated to one value") {
  DenseTensor m({2, 2}, {3, 0, 0, 2});
  SvdResult r = svd_truncate(m, 1);
  REQUIRE(r.singular_values.size() == 1);
  CHECK(r.singular_values[0] == doctest::Approx(3.0));
  CHECK(r.left.at({0, 0}) == doctest::Approx(1.0));
  CHECK(std::abs(r.left.at({1, 0})) < 1e-15);
  CHECK(r.discarded_weight == doctest::Approx(2.0));
}

TEST_CASE("svd of the identity keeps exactly the requested count") {
  DenseTensor m({2, 2}, {1, 0, 0, 1});
  SvdResult r = svd_truncate(m, 1);
  CHECK(r.singular_values.size() == 1);
  CHECK(r.singular_values[0] == doctest::Approx(1.0));
  CHECK(r.discarded_weight == doctest::Approx(1.0));
}

TEST_CASE("svd rejects invalid input") {
  DenseTensor m({2, 2}, {1, 0, 0, 1});
  CHECK_THROWS_AS(svd_truncate(m, 0), InvalidArgument);
  DenseTensor bad({2, 2}, {1, std::numeric_limits<double>::quiet_NaN(), 0, 1});
  CHECK_THROWS_AS(svd_truncate(bad, 2), NumericalFailure);
  CHECK_THROWS_AS(svd_truncate(DenseTensor::zeros({2, 2, 2}), 1), InvalidArgument);
}

TEST_CASE("svd satisfies reconstruction, ordering, signs and optimality") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Eigen::Index> dim(1, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index rows = dim(rng);
    const Eigen::Index cols = dim(rng);
    const Eigen::MatrixXd m = oracle::gaussian_matrix(rng, rows, cols);
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 8;
    SvdResult r = svd_truncate(DenseTensor::from_matrix(m), k);
    const Eigen::MatrixXd u = r.left.to_matrix();
    const Eigen::MatrixXd vt = r.right.to_matrix();
    const auto kept = static_cast<Eigen::Index>(r.singular_values.size());
    REQUIRE(kept == std::min<Eigen::Index>(static_cast<Eigen::Index>(k),
                                           std::min(rows, cols)));
    Eigen::VectorXd s(kept);
    for (Eigen::Index j = 0; j < kept; ++j) s(j) = r.singular_values[j];
    for (Eigen::Index j = 1; j < kept; ++j) CHECK(s(j - 1) >= s(j));
    CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(kept, kept)).norm() < 1e-12);
    CHECK((vt * vt.transpose() - Eigen::MatrixXd::Identity(kept, kept)).norm() < 1e-12);
    for (Eigen::Index j = 0; j < kept; ++j) {
      Eigen::Index big = 0;
      for (Eigen::Index i = 1; i < rows; ++i) {
        if (std::abs(u(i, j)) > std::abs(u(big, j))) big = i;
      }
      CHECK(u(big, j) >= 0.0);
    }
    const Eigen::MatrixXd approx = u * s.asDiagonal() * vt;
    const double err = (m - approx).norm();
    CHECK(std::abs(err - r.discarded_weight) <= 1e-10 * std::max(1.0, m.norm()));

    const Eigen::VectorXd all = m.jacobiSvd().singularValues();
    double tail = 0.0;
    for (Eigen::Index j = kept; j < all.size(); ++j) tail += all(j) * all(j);
    CHECK(std::abs(err - std::sqrt(tail)) <= 1e-10 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("svd of a rank-deficient matrix keeps orthonormal factors") {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd a = oracle::gaussian_matrix(rng, 6, 2);
  const Eigen::MatrixXd b = oracle::gaussian_matrix(rng, 2, 5);
  const Eigen::MatrixXd m = a * b;
  SvdResult r = svd_truncate(DenseTensor::from_matrix(m), 4);
  REQUIRE(r.singular_values.size() == 4);
  CHECK(r.singular_values[2] < 1e-12);
  const Eigen::MatrixXd u = r.left.to_matrix();
  CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-12);
  CHECK(r.discarded_weight < 1e-12);
  Eigen::VectorXd s(4);
  for (int j = 0; j < 4; ++j) s(j) = r.singular_values[j];
  CHECK((m - u * s.asDiagonal() * r.right.to_matrix()).norm() < 1e-12);
}

TEST_CASE("nullspace completion") {
  std::mt19937_64 rng(9);
  for (Eigen::Index q = 1; q <= 6; ++q) {
    for (Eigen::Index k = 0; k <= q; ++k) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(oracle::gaussian_matrix(rng, q, q));
      const Eigen::MatrixXd basis = Eigen::MatrixXd(qr.householderQ()).leftCols(k);
      const Eigen::MatrixXd full = nullspace_complete(basis);
      REQUIRE(full.rows() == q);
      REQUIRE(full.cols() == q);
      CHECK((full.transpose() * full - Eigen::MatrixXd::Identity(q, q)).cwiseAbs().maxCoeff() <
            1e-12);
      CHECK(full.leftCols(k) == basis);
    }
  }
  Eigen::MatrixXd not_unit(2, 1);
  not_unit << 1.0, 1.0;
  CHECK_THROWS_AS(nullspace_complete(not_unit), InvalidArgument);
  const Eigen::MatrixXd empty(4, 0);
  CHECK(nullspace_complete(empty).isApprox(Eigen::MatrixXd::Identity(4, 4)));
}

TEST_CASE("left singular basis completes rank-deficient unfoldings") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 3);
  m(0, 0) = 2.0;
  m(3, 1) = 1.0;
  std::vector<double> sv;
  const Eigen::MatrixXd u = left_singular_basis(m, &sv);
  CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
  CHECK(u(0, 0) == doctest::Approx(1.0));
  CHECK(u(3, 1) == doctest::Approx(1.0));
  CHECK(sv[0] == doctest::Approx(2.0));
  CHECK(sv[2] == 0.0);
}
