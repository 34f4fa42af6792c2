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

#ifndef SINR_LAYER_CODING_H_
#define SINR_LAYER_CODING_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sinr/network.h"
#include "sinr/omp.h"

namespace sinr {

enum class CodingMode : uint8_t {
  // The matrix is split along its longer side: each column when
  // rows >= cols, otherwise each row, is its own vector. For an (h, m) net
  // that gives a vectors into the first layer, m per hidden matrix and b out
  // of the last, all of length m.
  kPerVector = 0,
  // The whole matrix, flattened row-major, is a single vector.
  kFlattened = 1,
};

std::string ToString(CodingMode mode);

struct LayerCodingOptions {
  // Matrices whose longer side is below this are flattened.
  int width_threshold = 50;
  // k2 = min(k2_factor * k1, 65536).
  int k2_factor = 512;
  uint64_t master_seed = 0;
};

// A weight matrix expressed as sparse codes over one seeded dictionary.
struct LayerCoding {
  CodingMode mode = CodingMode::kPerVector;
  int rows = 0;
  int cols = 0;
  int k1 = 0;
  int k2 = 0;
  int s = 0;
  uint64_t seed = 0;
  std::vector<SparseCode> codes;
  // Worst per-vector ||w - A x|| / ||w|| when the coding was produced.
  double worst_rel_err = 0.0;
};

// PerVector when max(rows, cols) >= width_threshold, else Flattened.
CodingMode ChooseMode(int rows, int cols, int width_threshold);
// Length of one coded vector for the given mode.
int VectorLength(CodingMode mode, int rows, int cols);
int VectorCount(CodingMode mode, int rows, int cols);
// min(factor * k1, 65536); throws InvalidArgument if that is not > k1.
int DictionaryWidth(int k1, int k2_factor);
// Dictionary seed of layer `layer_index`: master_seed XOR layer_index.
uint64_t LayerSeed(uint64_t master_seed, int layer_index);

// k1 x n matrix whose columns are the vectors to code.
Eigen::MatrixXd LayerVectors(const Eigen::MatrixXd& w, CodingMode mode);
// Inverse of LayerVectors.
Eigen::MatrixXd AssembleLayer(const Eigen::MatrixXd& vectors, CodingMode mode,
                              int rows, int cols);

// Codes `w` with sparsity s. Throws BudgetError if 2s >= k1 for the chosen
// mode; other failures are rethrown with the layer and vector index.
LayerCoding EncodeLayer(const Eigen::MatrixXd& w, int layer_index, int s,
                        const LayerCodingOptions& opts);

// Regenerates the dictionary from (seed, k1, k2) and rebuilds the matrix.
Eigen::MatrixXd DecodeLayer(const LayerCoding& coding);

struct SweepPoint {
  int s = 0;
  // Worst per-vector ||w - A x|| / ||w|| over the layer.
  double rel_err = 0.0;
};

struct SweepResult {
  int s_opt = 0;
  double achieved_rel_err = 0.0;
  // False when even the largest feasible s misses rel_tol.
  bool met = false;
  std::vector<SweepPoint> curve;
  LayerCoding coding;  // coding at s_opt
};

// Candidate sparsities: 2, 2 + step, ... with step = max(1, k1 / 64), while
// 2s < k1, plus the largest feasible s. Throws BudgetError if k1 < 3.
std::vector<int> SweepGrid(int k1);

// Smallest grid s whose worst per-vector relative error is <= rel_tol, or the
// largest feasible s with met = false. With full_curve the path is evaluated
// on the whole grid instead of stopping at s_opt.
SweepResult SweepS(const Eigen::MatrixXd& w, int layer_index, double rel_tol,
                   const LayerCodingOptions& opts, bool full_curve = false);

struct ParameterCounts {
  int64_t t_s = 0;     // a k + l k^2 + b k
  int64_t t_sinr = 0;  // a 2s + k l 2s + b 2s
};

ParameterCounts CountParameters(const Architecture& arch, int s);

}  // namespace sinr

#endif  // SINR_LAYER_CODING_H_
