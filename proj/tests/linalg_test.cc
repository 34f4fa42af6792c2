// Copyright 2026 The SINR Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "sinr/linalg.h"

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

Eigen::MatrixXd Gaussian(int rows, int cols, uint64_t seed) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.NextGaussianPair().first;
  }
  return m;
}

TEST(LeastSquaresTest, AgreesWithQrOracle) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Eigen::MatrixXd a = Gaussian(40, 7, seed);
    const Eigen::VectorXd b = Gaussian(40, 1, seed + 100).col(0);
    const Eigen::VectorXd x = LeastSquares(a, b);
    const Eigen::VectorXd oracle = a.colPivHouseholderQr().solve(b);
    EXPECT_LT((x - oracle).norm(), 1e-10 * oracle.norm()) << seed;
    // Normal equations: the residual is orthogonal to every column.
    EXPECT_LT((a.transpose() * (b - a * x)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(LeastSquaresTest, ExactSystemIsSolvedExactly) {
  const Eigen::MatrixXd a = Gaussian(6, 6, 3);
  const Eigen::VectorXd x0 = Gaussian(6, 1, 4).col(0);
  EXPECT_LT((LeastSquares(a, a * x0) - x0).norm(), 1e-10);
}

TEST(LeastSquaresTest, RankDeficientBasisThrows) {
  Eigen::MatrixXd a = Gaussian(10, 3, 5);
  a.col(2) = 2.0 * a.col(0) - a.col(1);
  EXPECT_THROW(LeastSquares(a, Gaussian(10, 1, 6).col(0)), RankDeficientError);
}

TEST(LeastSquaresTest, ShapeErrors) {
  EXPECT_THROW(LeastSquares(Gaussian(5, 2, 1), Gaussian(4, 1, 1).col(0)),
               InvalidArgument);
  EXPECT_THROW(LeastSquares(Gaussian(3, 4, 1), Gaussian(3, 1, 1).col(0)),
               InvalidArgument);
}

TEST(GrowingCholeskyTest, PrefixSolvesMatchDirectFactorization) {
  const Eigen::MatrixXd basis = Gaussian(30, 8, 9);
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  GrowingCholesky chol(2);  // grows past its initial capacity
  for (int t = 0; t < 8; ++t) {
    ASSERT_TRUE(chol.Append(gram.col(t).head(t), gram(t, t)));
  }
  EXPECT_EQ(chol.size(), 8);
  const Eigen::VectorXd rhs = Gaussian(8, 1, 10).col(0);
  for (int t = 1; t <= 8; ++t) {
    const Eigen::VectorXd expect =
        gram.topLeftCorner(t, t).llt().solve(rhs.head(t));
    EXPECT_LT((chol.Solve(rhs.head(t)) - expect).norm(),
              1e-10 * expect.norm());
  }
}

TEST(GrowingCholeskyTest, RejectsDependentVectorAndStaysUsable) {
  Eigen::MatrixXd basis = Gaussian(12, 3, 2);
  basis.col(2) = basis.col(0);
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  GrowingCholesky chol(4);
  ASSERT_TRUE(chol.Append(gram.col(0).head(0), gram(0, 0)));
  ASSERT_TRUE(chol.Append(gram.col(1).head(1), gram(1, 1)));
  EXPECT_FALSE(chol.Append(gram.col(2).head(2), gram(2, 2)));
  EXPECT_EQ(chol.size(), 2);
  const Eigen::Vector2d rhs(1.0, -2.0);
  EXPECT_LT((gram.topLeftCorner(2, 2) * chol.Solve(rhs) - rhs).norm(), 1e-10);
}

}  // namespace
}  // namespace sinr
