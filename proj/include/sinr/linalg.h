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

#ifndef SINR_LINALG_H_
#define SINR_LINALG_H_

#include <Eigen/Dense>

namespace sinr {

// Relative pivot floor below which a Gram matrix is treated as singular.
inline constexpr double kRankTolerance = 1e-12;

// Cholesky factor of a Gram matrix that grows one basis vector at a time,
// G = L L^T. The leading t x t block of L is the factor of the first t
// vectors, so solves against any prefix of the basis stay available.
class GrowingCholesky {
 public:
  explicit GrowingCholesky(int capacity) : l_(capacity, capacity) {}

  int size() const { return size_; }

  // Appends a basis vector given its inner products with the existing basis
  // (`cross`, length size()) and its squared norm. Returns false and leaves
  // the factor untouched when the new pivot falls below kRankTolerance times
  // the largest diagonal seen so far.
  bool Append(const Eigen::Ref<const Eigen::VectorXd>& cross, double diag);

  // Solves G_t x = rhs for the leading t x t block, t = rhs.size().
  Eigen::VectorXd Solve(const Eigen::Ref<const Eigen::VectorXd>& rhs) const;

 private:
  Eigen::MatrixXd l_;
  int size_ = 0;
  double max_diag_ = 0.0;
};

// argmin_c ||basis * c - target||_2 through the normal equations with one
// step of iterative refinement. Throws RankDeficientError when the columns
// are numerically dependent and InvalidArgument on a shape mismatch.
Eigen::VectorXd LeastSquares(const Eigen::Ref<const Eigen::MatrixXd>& basis,
                             const Eigen::Ref<const Eigen::VectorXd>& target);

}  // namespace sinr

#endif  // SINR_LINALG_H_
