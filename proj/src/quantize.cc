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
#include "sinr/quantize.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sinr/errors.h"

namespace sinr {
namespace {

float FloatAtOrBelow(double v) {
  float f = static_cast<float>(v);
  if (static_cast<double>(f) > v) {
    f = std::nextafter(f, -std::numeric_limits<float>::infinity());
  }
  return f;
}

float FloatAtOrAbove(double v) {
  float f = static_cast<float>(v);
  if (static_cast<double>(f) < v) {
    f = std::nextafter(f, std::numeric_limits<float>::infinity());
  }
  return f;
}

}  // namespace

double QuantizedBlock::HalfStep() const {
  return (static_cast<double>(vmax) - static_cast<double>(vmin)) /
         (2.0 * levels());
}

QuantizedBlock Quantize(std::span<const double> values, int bitwidth) {
  if (bitwidth < 1 || bitwidth > 16) {
    throw InvalidArgument("quantizer bitwidth must be in [1, 16]");
  }
  QuantizedBlock block;
  block.bitwidth = bitwidth;
  if (values.empty()) return block;
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("cannot quantize non-finite value");
    if (std::abs(v) > std::numeric_limits<float>::max()) {
      throw InvalidArgument("value exceeds the single precision range");
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  block.codes.assign(values.size(), 0);
  if (lo == hi) {
    block.vmin = block.vmax = static_cast<float>(lo);
    return block;
  }
  block.vmin = FloatAtOrBelow(lo);
  block.vmax = FloatAtOrAbove(hi);
  const double vmin = block.vmin;
  const double range = static_cast<double>(block.vmax) - vmin;
  const double levels = block.levels();
  for (size_t i = 0; i < values.size(); ++i) {
    const double q = std::round((values[i] - vmin) / range * levels);
    block.codes[i] = static_cast<uint16_t>(std::clamp(q, 0.0, levels));
  }
  return block;
}

std::vector<double> Dequantize(const QuantizedBlock& block) {
  const double vmin = block.vmin;
  const double range = static_cast<double>(block.vmax) - vmin;
  const double levels = block.levels();
  std::vector<double> out(block.codes.size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = vmin + block.codes[i] / levels * range;
  }
  return out;
}

}  // namespace sinr
