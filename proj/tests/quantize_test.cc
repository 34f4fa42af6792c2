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

#include <cmath>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

TEST(QuantizeTest, ThreePointExample) {
  const std::vector<double> v = {-1.0, 0.0, 1.0};
  const QuantizedBlock q = Quantize(v);
  EXPECT_EQ(q.codes, (std::vector<uint16_t>{0, 32768, 65535}));
  EXPECT_EQ(q.vmin, -1.0f);
  EXPECT_EQ(q.vmax, 1.0f);
  const std::vector<double> back = Dequantize(q);
  EXPECT_EQ(back[0], -1.0);
  EXPECT_EQ(back[2], 1.0);
  EXPECT_NEAR(back[1], 0.0, 1.0 / 65535);
}

TEST(QuantizeTest, ErrorBoundHoldsOnRandomRanges) {
  SplitMix64 rng(4);
  for (int range = 0; range < 20; ++range) {
    const double lo = rng.NextUniform(-100.0, 100.0);
    const double width = std::exp(rng.NextUniform(-20.0, 5.0));
    std::vector<double> v(10000);
    for (double& x : v) x = lo + width * rng.NextUniform();
    const QuantizedBlock q = Quantize(v);
    const std::vector<double> back = Dequantize(q);
    const double bound = (double{q.vmax} - double{q.vmin}) / 65535.0;
    EXPECT_LE(q.vmin, *std::min_element(v.begin(), v.end()));
    EXPECT_GE(q.vmax, *std::max_element(v.begin(), v.end()));
    for (size_t i = 0; i < v.size(); ++i) {
      ASSERT_LE(std::abs(back[i] - v[i]), bound) << range << " " << i;
      ASSERT_LE(std::abs(back[i] - v[i]), q.HalfStep() * (1 + 1e-9));
    }
  }
}

TEST(QuantizeTest, DegenerateRangeGivesZeroCodes) {
  const std::vector<double> v(5, 0.25);
  const QuantizedBlock q = Quantize(v);
  EXPECT_EQ(q.vmin, q.vmax);
  for (uint16_t c : q.codes) EXPECT_EQ(c, 0);
  for (double x : Dequantize(q)) EXPECT_EQ(x, 0.25);
  EXPECT_EQ(q.HalfStep(), 0.0);
}

TEST(QuantizeTest, EmptyBlock) {
  const QuantizedBlock q = Quantize(std::vector<double>{});
  EXPECT_TRUE(q.codes.empty());
  EXPECT_TRUE(Dequantize(q).empty());
}

TEST(QuantizeTest, RangeIsWidenedToFloat) {
  // 0.1 is not a float; the stored range must still contain it.
  const std::vector<double> v = {0.1, 0.7};
  const QuantizedBlock q = Quantize(v);
  EXPECT_LE(double{q.vmin}, 0.1);
  EXPECT_GE(double{q.vmax}, 0.7);
  const auto back = Dequantize(q);
  EXPECT_NEAR(back[0], 0.1, q.HalfStep());
}

TEST(QuantizeTest, LowBitwidthAndHalfwayRounding) {
  // 2 bits: levels 0..3 over [0, 3]; 1.5 sits halfway and rounds up.
  const std::vector<double> v = {0.0, 1.5, 3.0, 1.0};
  const QuantizedBlock q = Quantize(v, 2);
  EXPECT_EQ(q.levels(), 3u);
  EXPECT_EQ(q.codes, (std::vector<uint16_t>{0, 2, 3, 1}));
}

TEST(QuantizeTest, RejectsBadInput) {
  EXPECT_THROW(Quantize(std::vector<double>{1.0}, 0), InvalidArgument);
  EXPECT_THROW(Quantize(std::vector<double>{1.0}, 17), InvalidArgument);
  EXPECT_THROW(Quantize(std::vector<double>{1.0, std::nan("")}),
               InvalidArgument);
  EXPECT_THROW(Quantize(std::vector<double>{INFINITY}), InvalidArgument);
}

}  // namespace
}  // namespace sinr
