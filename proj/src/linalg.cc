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

#include <algorithm>
#include <cmath>
#include <string>

#include "sinr/errors.h"

namespace sinr {

bool GrowingCholesky::Append(const Eigen::Ref<const Eigen::VectorXd>& cross,
                             double diag) {
  const int t = size_;
  if (t == l_.rows()) {
    l_.conservativeResize(2 * t + 1, 2 * t + 1);
  }
  const double ref = std::max(max_diag_, diag);
  Eigen::VectorXd row(t);
  if (t > 0) {
    row = l_.topLeftCorner(t, t).triangularView<Eigen::Lower>().solve(cross);
  }
  const double pivot = diag - row.squaredNorm();
  if (!(pivot > kRankTolerance * ref)) return false;
  if (t > 0) l_.row(t).head(t) = row.transpose();
  l_(t, t) = std::sqrt(pivot);
  max_diag_ = ref;
  ++size_;
  return true;
}

Eigen::VectorXd GrowingCholesky::Solve(
    const Eigen::Ref<const Eigen::VectorXd>& rhs) const {
  const int t = static_cast<int>(rhs.size());
  const auto lower = l_.topLeftCorner(t, t).triangularView<Eigen::Lower>();
  Eigen::VectorXd y = lower.solve(rhs);
  return lower.transpose().solve(y);
}

Eigen::VectorXd LeastSquares(const Eigen::Ref<const Eigen::MatrixXd>& basis,
                             const Eigen::Ref<const Eigen::VectorXd>& target) {
  const Eigen::Index rows = basis.rows();
  const Eigen::Index cols = basis.cols();
  if (target.size() != rows) {
    throw InvalidArgument("least squares: target length " +
                          std::to_string(target.size()) + " != basis rows " +
                          std::to_string(rows));
  }
  if (cols < 1 || cols > rows) {
    throw InvalidArgument("least squares: need 1 <= columns <= rows, got " +
                          std::to_string(cols) + " columns");
  }
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  GrowingCholesky chol(static_cast<int>(cols));
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (!chol.Append(gram.col(j).head(j), gram(j, j))) {
      throw RankDeficientError("least squares: basis column " +
                               std::to_string(j) +
                               " is numerically dependent on earlier columns");
    }
  }
  Eigen::VectorXd coef = chol.Solve(basis.transpose() * target);
  // One refinement step recovers most of the accuracy lost by squaring the
  // condition number in the normal equations.
  const Eigen::VectorXd residual = target - basis * coef;
  coef += chol.Solve(basis.transpose() * residual);
  return coef;
}

}  // namespace sinr
