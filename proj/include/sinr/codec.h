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

#ifndef SINR_CODEC_H_
#define SINR_CODEC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sinr/container.h"
#include "sinr/layer_coding.h"
#include "sinr/network.h"

namespace sinr {

struct CompressConfig {
  // Empty: sweep s per layer against rel_tol. One entry: the same s for every
  // layer. Otherwise one entry per weight matrix.
  std::vector<int> s_per_layer;
  double rel_tol = 0.02;
  // Sweep tolerance of the first weight matrix. 0 means rel_tol / omega0 for
  // sine and rel_tol / sigma for Gaussian networks, whose first-layer errors
  // are amplified by that scale, and rel_tol for ReLU.
  double input_rel_tol = 0.0;
  // A swept layer that cannot reach its tolerance with 2s < k1 is stored as
  // dense quantized weights (float64 when lossless) instead.
  bool dense_fallback = true;
  int k2_factor = 512;
  int bitwidth = 16;
  uint64_t master_seed = 0;
  // Store nonzero values and biases as float32 instead of quantizing.
  bool lossless = false;
  int width_threshold = 50;

  void Validate() const;
  double LayerTolerance(const Architecture& arch, int layer) const;
};

struct LayerReport {
  int layer = 0;
  // Stored without sparse coding (dense fallback); s and k2 are then 0.
  bool dense = false;
  CodingMode mode = CodingMode::kPerVector;
  int rows = 0;
  int cols = 0;
  int k1 = 0;
  int k2 = 0;
  int s = 0;
  int codes = 0;
  // Worst per-vector relative error of the sparse code before quantization.
  double sparse_rel_err = 0.0;
  // Worst per-vector relative error after the full encode/decode round trip.
  double decoded_rel_err = 0.0;
  // Quantization half step of the nonzero-value block (0 when lossless).
  double value_half_step = 0.0;
  double tolerance = 0.0;
  // False if the sweep could not reach its tolerance within 2s < k1.
  bool met = true;
};

struct CompressReport {
  size_t bytes = 0;
  // Parameter-count formulas, evaluated with s_ref = the largest s used by a
  // sparse-coded hidden layer (or by any sparse layer for nets without
  // hidden layers).
  int s_ref = 0;
  int64_t t_s = 0;
  int64_t t_sinr = 0;
  // Scalars actually stored for weights: 2 s per code, or rows * cols for a
  // dense layer, summed over layers.
  int64_t stored_scalars = 0;
  int64_t raw_weights = 0;
  double worst_rel_err = 0.0;
  std::vector<LayerReport> layers;
};

struct CompressResult {
  std::vector<uint8_t> bytes;  // Brotli-wrapped container
  CompressedInr container;
  CompressReport report;
};

// Sparse-codes every weight matrix, quantizes nonzero values and biases,
// serializes and entropy codes. Deterministic in (net, cfg).
CompressResult CompressInr(const Network& net, const CompressConfig& cfg);

// Rebuilds a forward-ready network from a container of any layer mode,
// regenerating dictionaries from the stored seed.
Network ContainerToNetwork(const CompressedInr& c);

// Unwrap, deserialize, validate, rebuild. Throws FormatError on any
// malformed input.
Network DecompressInr(std::span<const uint8_t> bytes);

// Lossless float64 checkpoint in the same container format.
std::vector<uint8_t> EncodeCheckpoint(const Network& net);

// Baseline: every weight matrix quantized densely at `bitwidth`, then the
// same serialization and entropy coding.
std::vector<uint8_t> EncodeBaseline(const Network& net, int bitwidth = 16);

}  // namespace sinr

#endif  // SINR_CODEC_H_
