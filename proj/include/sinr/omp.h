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

#ifndef SINR_OMP_H_
#define SINR_OMP_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sinr/dictionary.h"
#include "sinr/linalg.h"

namespace sinr {

// Largest dictionary width whose atom indices fit in 16 bits.
inline constexpr int kMaxAtoms = 65536;

// s nonzero coefficients of a length-k2 vector x, such that w ~= A x for a
// k1 x k2 dictionary A. Instances always satisfy the storage budget 2s < k1.
class SparseCode {
 public:
  // Throws BudgetError if 2s >= k1 and InvalidArgument unless s >= 1,
  // |indices| == |values|, indices are strictly increasing and below k2, and
  // k2 <= kMaxAtoms.
  static SparseCode Make(int k1, int k2, std::vector<uint32_t> indices,
                         std::vector<double> values,
                         bool rank_deficient = false);

  int k1() const { return k1_; }
  int k2() const { return k2_; }
  int s() const { return static_cast<int>(indices_.size()); }
  const std::vector<uint32_t>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }
  // OMP stopped before reaching the requested sparsity because the next atom
  // was numerically dependent on the selected ones.
  bool rank_deficient() const { return rank_deficient_; }

  bool operator==(const SparseCode&) const = default;

 private:
  SparseCode() = default;

  int k1_ = 0;
  int k2_ = 0;
  std::vector<uint32_t> indices_;
  std::vector<double> values_;
  bool rank_deficient_ = false;
};

// Orthogonal Matching Pursuit run jointly on the columns of a k1 x n matrix.
// Each Step() adds one atom per vector: the unselected atom with the largest
// |<atom, residual>| (ties go to the lowest index), followed by a least
// squares refit of all selected coefficients. Correlations for all vectors
// are computed as one matrix product in fixed chunks, so results do not
// depend on the thread count.
//
// The selection at step t depends only on steps < t, so a path run to s_max
// contains the exact OMP solution for every s <= s_max.
class OmpPath {
 public:
  OmpPath(const Dictionary& dict, const Eigen::MatrixXd& targets);

  void Step();

  int steps() const { return steps_; }
  int vector_count() const { return static_cast<int>(states_.size()); }
  // Atoms selected for vector v; below steps() only if it went rank deficient
  // (or the dictionary ran out of atoms).
  int atoms(int v) const;
  bool rank_deficient(int v) const { return states_[v].rank_deficient; }
  // ||w_v - A x_v|| after every step; entry 0 is ||w_v||.
  const std::vector<double>& residual_history(int v) const {
    return states_[v].history;
  }
  // ||r|| / ||w|| using the first `s` atoms (0 for a zero vector).
  double RelativeError(int v, int s) const;
  double WorstRelativeError(int s) const;

  // Code for vector v restricted to its first min(s, atoms(v)) atoms. A zero
  // target gives indices 0..s-1 with zero values.
  SparseCode Code(int v, int s) const;
  // Coefficients of the first t selected atoms, in selection order.
  Eigen::VectorXd Coefficients(int v, int t) const;
  // Residual w - A_S c for the first t selected atoms.
  Eigen::VectorXd Residual(int v, int t) const;
  const std::vector<int>& selection(int v) const {
    return states_[v].selected;
  }

 private:
  struct VectorState {
    std::vector<int> selected;
    std::vector<double> target_corr;  // A_S^T w in selection order
    GrowingCholesky chol{8};
    std::vector<double> history;
    double norm = 0.0;
    bool zero = false;
    bool rank_deficient = false;
  };

  void StepChunk(int first, int last);
  Eigen::MatrixXd Selected(int v, int t) const;

  const Dictionary& dict_;
  Eigen::MatrixXd targets_;
  Eigen::MatrixXd residuals_;
  std::vector<VectorState> states_;
  int steps_ = 0;
};

// Single-vector OMP with exactly the contract of OmpPath. Requires
// 1 <= s, 2s < k1 (BudgetError otherwise) and ||w|| > 0.
SparseCode Omp(const Dictionary& dict, const Eigen::VectorXd& w, int s);

// sum_t values[t] * A[:, indices[t]].
Eigen::VectorXd Reconstruct(const Dictionary& dict, const SparseCode& code);

}  // namespace sinr

#endif  // SINR_OMP_H_
