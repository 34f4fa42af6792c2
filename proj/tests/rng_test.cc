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
#include "sinr/rng.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace sinr {
namespace {

TEST(SplitMix64Test, MatchesReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ull);
}

TEST(SplitMix64Test, StateAdvancesByGoldenGamma) {
  SplitMix64 rng(42);
  rng.Next();
  rng.Next();
  EXPECT_EQ(rng.state(), 42 + 2 * 0x9E3779B97F4A7C15ull);
}

TEST(SplitMix64Test, SameSeedSameStream) {
  SplitMix64 a(12345), b(12345), c(12346);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs |= x != c.Next();
  }
  EXPECT_TRUE(differs);
}

TEST(SplitMix64Test, UniformUsesTop53Bits) {
  SplitMix64 a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.NextUniform();
    EXPECT_EQ(u, static_cast<double>(b.Next() >> 11) / 9007199254740992.0);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(SplitMix64Test, BoxMullerMatchesDirectFormula) {
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 100; ++i) {
    const auto [g0, g1] = a.NextGaussianPair();
    double u1 = static_cast<double>(b.Next() >> 11) * std::ldexp(1.0, -53);
    const double u2 = static_cast<double>(b.Next() >> 11) * std::ldexp(1.0, -53);
    u1 = std::max(u1, std::ldexp(1.0, -53));
    const double r = std::sqrt(-2.0 * std::log(u1));
    EXPECT_DOUBLE_EQ(g0, r * std::cos(2.0 * M_PI * u2));
    EXPECT_DOUBLE_EQ(g1, r * std::sin(2.0 * M_PI * u2));
  }
}

TEST(SplitMix64Test, GaussianMoments) {
  SplitMix64 rng(2026);
  constexpr int kPairs = 200000;
  double sum = 0, sum2 = 0, sum4 = 0;
  for (int i = 0; i < kPairs; ++i) {
    const auto [a, b] = rng.NextGaussianPair();
    for (double g : {a, b}) {
      sum += g;
      sum2 += g * g;
      sum4 += g * g * g * g;
    }
  }
  const double n = 2.0 * kPairs;
  // Standard errors: mean 1/sqrt(n), variance sqrt(2/n), fourth moment
  // sqrt(96/n); allow five of each.
  EXPECT_NEAR(sum / n, 0.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(sum2 / n, 1.0, 5.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(sum4 / n, 3.0, 5.0 * std::sqrt(96.0 / n));
}

TEST(SplitMix64Test, UniformRangeHelper) {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.NextUniform(-2.0, 5.0);
    EXPECT_GE(u, -2.0);
    EXPECT_LT(u, 5.0);
  }
}

}  // namespace
}  // namespace sinr
