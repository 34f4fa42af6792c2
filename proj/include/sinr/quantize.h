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
#ifndef SINR_QUANTIZE_H_
#define SINR_QUANTIZE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace sinr {

// Uniform scalar quantizer over a per-block [vmin, vmax] range. The range is
// held in single precision because that is how it is stored on disk.
struct QuantizedBlock {
  int bitwidth = 16;
  float vmin = 0.0f;
  float vmax = 0.0f;
  std::vector<uint16_t> codes;

  uint32_t levels() const { return (1u << bitwidth) - 1u; }
  // Largest |dequantized - original| for values inside the range.
  double HalfStep() const;

  bool operator==(const QuantizedBlock&) const = default;
};

// code = round((v - vmin) / (vmax - vmin) * (2^b - 1)), halves rounded away
// from zero. The range is widened outward to the nearest floats so every
// value stays inside it; a constant block keeps vmin == vmax and all-zero
// codes. Throws InvalidArgument on non-finite input or bitwidth outside
// [1, 16].
QuantizedBlock Quantize(std::span<const double> values, int bitwidth = 16);

// v = vmin + code / (2^b - 1) * (vmax - vmin).
std::vector<double> Dequantize(const QuantizedBlock& block);

}  // namespace sinr

#endif  // SINR_QUANTIZE_H_
