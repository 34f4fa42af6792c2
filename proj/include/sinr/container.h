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

#ifndef SINR_CONTAINER_H_
#define SINR_CONTAINER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sinr/network.h"
#include "sinr/quantize.h"

namespace sinr {

inline constexpr uint16_t kFormatVersion = 1;
inline constexpr uint8_t kMagic[4] = {'S', 'I', 'N', 'R'};

// Header flag: bias and nonzero values are stored as raw float32 instead of
// quantized codes. Used to separate sparse-coding error from quantization.
inline constexpr uint8_t kFlagLossless = 0x01;

enum class LayerMode : uint8_t {
  kPerVector = 0,   // one sparse code per weight-matrix column
  kFlattened = 1,   // one sparse code for the row-major flattened matrix
  kRaw = 2,         // float64 weights and biases (checkpoints)
  kDense = 3,       // quantized dense weights (quantize + entropy baseline)
};

// Per-layer record. Which members are meaningful depends on the mode and the
// container flags:
//   sparse modes: bias/values quantized (or float32 when lossless), indices
//   kRaw:         raw_bias, raw_weights (row-major)
//   kDense:       bias, values (row-major weights), no indices
struct LayerRecord {
  LayerMode mode = LayerMode::kPerVector;
  uint32_t k1 = 0;  // vector length (rows for kRaw / kDense)
  uint32_t k2 = 0;  // dictionary width (cols for kRaw / kDense)
  uint32_t s = 0;   // nonzeros per code (0 for kRaw / kDense)
  QuantizedBlock bias;
  QuantizedBlock values;
  std::vector<float> lossless_bias;
  std::vector<float> lossless_values;
  std::vector<double> raw_bias;
  std::vector<double> raw_weights;
  // Atom indices, code by code, each code strictly increasing.
  std::vector<uint16_t> indices;

  bool operator==(const LayerRecord&) const = default;
};

// Everything a decoder needs: no dictionary and no side information.
struct CompressedInr {
  uint16_t version = kFormatVersion;
  Architecture arch;
  uint8_t bitwidth = 16;
  uint8_t flags = 0;
  uint64_t master_seed = 0;
  std::vector<LayerRecord> layers;

  bool lossless() const { return (flags & kFlagLossless) != 0; }
  bool operator==(const CompressedInr&) const = default;
};

// Little-endian layout, integers unsigned:
//   "SINR" | version u16
//   input_dim u32 | output_dim u32 | hidden_layers u32 | hidden_width u32
//   activation u8 | omega0 f64 | sigma f64 | pe_levels u32
//   bitwidth u8 | flags u8 | master_seed u64 | layer_count u32
//   per layer: mode u8 | k1 u32 | k2 u32 | s u32 | bias block | weight block
//              | indices u16[count] (sparse modes only)
//   crc32 u32 over every preceding byte
// A quantized block is vmin f32 | vmax f32 | count u32 | codes u16[count];
// a float32 block is count u32 | f32[count]; a float64 block is
// count u32 | f64[count].
std::vector<uint8_t> Serialize(const CompressedInr& c);

// Parses and fully validates a container: magic, version, checksum, every
// count and index range, and the shape chain of the architecture. Throws
// FormatError on any inconsistency.
CompressedInr Deserialize(std::span<const uint8_t> bytes);

}  // namespace sinr

#endif  // SINR_CONTAINER_H_
