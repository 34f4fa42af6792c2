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
#include "sinr/layer_coding.h"

#include <algorithm>
#include <string>

#include "sinr/errors.h"

namespace sinr {
namespace {

// Rethrows the active exception with a location prefix, keeping its type.
[[noreturn]] void RethrowWithContext(const std::string& where) {
  try {
    throw;
  } catch (const BudgetError& e) {
    throw BudgetError(where + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(where + ": " + e.what());
  } catch (const RankDeficientError& e) {
    throw RankDeficientError(where + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError(where + ": " + e.what());
  }
}

// Fills a short (rank-deficient) code up to s entries with the lowest unused
// atoms at coefficient zero, which leaves the reconstruction unchanged.
SparseCode PadCode(const SparseCode& code, int s) {
  if (code.s() >= s) return code;
  std::vector<std::pair<uint32_t, double>> entries;
  for (int t = 0; t < code.s(); ++t) {
    entries.emplace_back(code.indices()[t], code.values()[t]);
  }
  for (uint32_t j = 0; static_cast<int>(entries.size()) < s; ++j) {
    if (!std::binary_search(code.indices().begin(), code.indices().end(), j)) {
      entries.emplace_back(j, 0.0);
    }
  }
  std::sort(entries.begin(), entries.end());
  std::vector<uint32_t> idx;
  std::vector<double> val;
  for (const auto& [j, v] : entries) {
    idx.push_back(j);
    val.push_back(v);
  }
  return SparseCode::Make(code.k1(), code.k2(), std::move(idx), std::move(val),
                          code.rank_deficient());
}

void CheckBudget(int s, int k1, int layer_index) {
  if (s < 1 || 2 * static_cast<int64_t>(s) >= k1) {
    throw BudgetError("layer " + std::to_string(layer_index) +
                      ": sparsity s=" + std::to_string(s) +
                      " violates 1 <= s and 2s < k1=" + std::to_string(k1));
  }
}

LayerCoding CollectCoding(const OmpPath& path, CodingMode mode, int rows,
                          int cols, int k1, int k2, int s, uint64_t seed) {
  LayerCoding coding;
  coding.mode = mode;
  coding.rows = rows;
  coding.cols = cols;
  coding.k1 = k1;
  coding.k2 = k2;
  coding.s = s;
  coding.seed = seed;
  coding.worst_rel_err = path.WorstRelativeError(s);
  coding.codes.reserve(path.vector_count());
  for (int v = 0; v < path.vector_count(); ++v) {
    coding.codes.push_back(PadCode(path.Code(v, s), s));
  }
  return coding;
}

}  // namespace

std::string ToString(CodingMode mode) {
  return mode == CodingMode::kPerVector ? "per-vector" : "flattened";
}

CodingMode ChooseMode(int rows, int cols, int width_threshold) {
  return std::max(rows, cols) >= width_threshold ? CodingMode::kPerVector
                                                 : CodingMode::kFlattened;
}

int VectorLength(CodingMode mode, int rows, int cols) {
  if (mode == CodingMode::kFlattened) return rows * cols;
  return std::max(rows, cols);
}

int VectorCount(CodingMode mode, int rows, int cols) {
  if (mode == CodingMode::kFlattened) return 1;
  return rows >= cols ? cols : rows;
}

int DictionaryWidth(int k1, int k2_factor) {
  if (k2_factor < 2) throw InvalidArgument("k2 factor must be at least 2");
  const int64_t k2 = std::min<int64_t>(static_cast<int64_t>(k1) * k2_factor,
                                       kMaxAtoms);
  if (k2 <= k1) {
    throw InvalidArgument("vector length " + std::to_string(k1) +
                          " leaves no room for an overcomplete dictionary "
                          "with 16-bit indices");
  }
  return static_cast<int>(k2);
}

uint64_t LayerSeed(uint64_t master_seed, int layer_index) {
  return master_seed ^ static_cast<uint64_t>(layer_index);
}

Eigen::MatrixXd LayerVectors(const Eigen::MatrixXd& w, CodingMode mode) {
  if (mode == CodingMode::kPerVector) {
    if (w.rows() >= w.cols()) return w;
    return w.transpose();
  }
  Eigen::MatrixXd flat(w.size(), 1);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) flat(i++, 0) = w(r, c);
  }
  return flat;
}

Eigen::MatrixXd AssembleLayer(const Eigen::MatrixXd& vectors, CodingMode mode,
                              int rows, int cols) {
  if (vectors.rows() != VectorLength(mode, rows, cols) ||
      vectors.cols() != VectorCount(mode, rows, cols)) {
    throw InvalidArgument("decoded vectors do not match the layer shape");
  }
  if (mode == CodingMode::kPerVector) {
    if (rows >= cols) return vectors;
    return vectors.transpose();
  }
  Eigen::MatrixXd w(rows, cols);
  Eigen::Index i = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) w(r, c) = vectors(i++, 0);
  }
  return w;
}

LayerCoding EncodeLayer(const Eigen::MatrixXd& w, int layer_index, int s,
                        const LayerCodingOptions& opts) {
  const int rows = static_cast<int>(w.rows());
  const int cols = static_cast<int>(w.cols());
  const CodingMode mode = ChooseMode(rows, cols, opts.width_threshold);
  const int k1 = VectorLength(mode, rows, cols);
  CheckBudget(s, k1, layer_index);
  try {
    const int k2 = DictionaryWidth(k1, opts.k2_factor);
    const uint64_t seed = LayerSeed(opts.master_seed, layer_index);
    const Dictionary dict = Dictionary::Sample(seed, k1, k2);
    OmpPath path(dict, LayerVectors(w, mode));
    for (int t = 0; t < s; ++t) path.Step();
    return CollectCoding(path, mode, rows, cols, k1, k2, s, seed);
  } catch (const Error&) {
    RethrowWithContext("layer " + std::to_string(layer_index));
  }
}

Eigen::MatrixXd DecodeLayer(const LayerCoding& coding) {
  if (coding.k1 != VectorLength(coding.mode, coding.rows, coding.cols) ||
      static_cast<int>(coding.codes.size()) !=
          VectorCount(coding.mode, coding.rows, coding.cols)) {
    throw InvalidArgument("layer coding is inconsistent with its shape");
  }
  const Dictionary dict = Dictionary::Sample(coding.seed, coding.k1, coding.k2);
  Eigen::MatrixXd vectors(coding.k1, coding.codes.size());
  for (size_t v = 0; v < coding.codes.size(); ++v) {
    vectors.col(v) = Reconstruct(dict, coding.codes[v]);
  }
  return AssembleLayer(vectors, coding.mode, coding.rows, coding.cols);
}

std::vector<int> SweepGrid(int k1) {
  const int s_max = (k1 - 1) / 2;
  if (s_max < 1) {
    throw BudgetError("vector length k1=" + std::to_string(k1) +
                      " admits no sparsity with 2s < k1");
  }
  std::vector<int> grid;
  const int step = std::max(1, k1 / 64);
  for (int s = 2; s <= s_max; s += step) grid.push_back(s);
  if (grid.empty() || grid.back() != s_max) grid.push_back(s_max);
  return grid;
}

SweepResult SweepS(const Eigen::MatrixXd& w, int layer_index, double rel_tol,
                   const LayerCodingOptions& opts, bool full_curve) {
  if (!(rel_tol > 0.0)) throw InvalidArgument("rel_tol must be positive");
  const int rows = static_cast<int>(w.rows());
  const int cols = static_cast<int>(w.cols());
  const CodingMode mode = ChooseMode(rows, cols, opts.width_threshold);
  const int k1 = VectorLength(mode, rows, cols);
  try {
    const std::vector<int> grid = SweepGrid(k1);
    const int k2 = DictionaryWidth(k1, opts.k2_factor);
    const uint64_t seed = LayerSeed(opts.master_seed, layer_index);
    const Dictionary dict = Dictionary::Sample(seed, k1, k2);
    OmpPath path(dict, LayerVectors(w, mode));
    SweepResult result;
    for (int s : grid) {
      while (path.steps() < s) path.Step();
      const double err = path.WorstRelativeError(s);
      result.curve.push_back({s, err});
      if (!result.met && err <= rel_tol) {
        result.met = true;
        result.s_opt = s;
        result.achieved_rel_err = err;
        result.coding = CollectCoding(path, mode, rows, cols, k1, k2, s, seed);
        if (!full_curve) break;
      }
    }
    if (!result.met) {
      const SweepPoint& last = result.curve.back();
      result.s_opt = last.s;
      result.achieved_rel_err = last.rel_err;
      result.coding =
          CollectCoding(path, mode, rows, cols, k1, k2, last.s, seed);
    }
    return result;
  } catch (const Error&) {
    RethrowWithContext("layer " + std::to_string(layer_index));
  }
}

ParameterCounts CountParameters(const Architecture& arch, int s) {
  arch.Validate();
  if (s < 1) throw InvalidArgument("sparsity must be at least 1");
  const int64_t a = arch.input_dim;
  const int64_t b = arch.output_dim;
  const int64_t l = arch.hidden_layers;
  const int64_t k = arch.hidden_width;
  return {a * k + l * k * k + b * k, a * 2 * s + k * l * 2 * s + b * 2 * s};
}

}  // namespace sinr
