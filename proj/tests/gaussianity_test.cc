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
#include "sinr/gaussianity.h"

#include <cmath>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

TEST(MomentsTest, SmallExactExample) {
  // {1, 2, 3, 10}: mean 4, central moments m2 = 12.5, m3 = 45, m4 = 348.5.
  const std::vector<double> v = {1, 2, 3, 10};
  const Moments m = SampleMoments(v);
  EXPECT_EQ(m.count, 4);
  EXPECT_DOUBLE_EQ(m.mean, 4.0);
  EXPECT_DOUBLE_EQ(m.std, std::sqrt(12.5));
  EXPECT_NEAR(m.skewness, 45.0 / std::pow(12.5, 1.5), 1e-12);
  EXPECT_NEAR(m.excess_kurtosis, 348.5 / (12.5 * 12.5) - 3.0, 1e-12);
}

TEST(MomentsTest, UniformAndGaussianShapes) {
  SplitMix64 rng(1);
  std::vector<double> u(400000), g(400000);
  for (size_t i = 0; i < u.size(); ++i) u[i] = rng.NextUniform(-1.0, 1.0);
  for (size_t i = 0; i < g.size(); i += 2) {
    const auto [a, b] = rng.NextGaussianPair();
    g[i] = a;
    g[i + 1] = b;
  }
  const Moments mu = SampleMoments(u);
  EXPECT_NEAR(mu.excess_kurtosis, -1.2, 0.02);
  EXPECT_NEAR(mu.skewness, 0.0, 0.02);
  EXPECT_NEAR(mu.std, 1.0 / std::sqrt(3.0), 0.005);
  const Moments mg = SampleMoments(g);
  EXPECT_NEAR(mg.excess_kurtosis, 0.0, 0.05);
  EXPECT_NEAR(mg.skewness, 0.0, 0.02);
}

TEST(MomentsTest, ExponentialSkew) {
  SplitMix64 rng(2);
  std::vector<double> e(400000);
  for (double& x : e) x = -std::log(1.0 - rng.NextUniform());
  const Moments m = SampleMoments(e);
  EXPECT_NEAR(m.skewness, 2.0, 0.1);
  EXPECT_NEAR(m.excess_kurtosis, 6.0, 1.0);
}

TEST(MomentsTest, DegenerateAndEmpty) {
  const Moments m = SampleMoments(std::vector<double>(10, 3.0));
  EXPECT_TRUE(m.degenerate);
  EXPECT_EQ(m.std, 0.0);
  EXPECT_EQ(m.skewness, 0.0);
  EXPECT_THROW(SampleMoments(std::vector<double>{}), InvalidArgument);
}

TEST(WeightGaussianityTest, UntrainedSirenIsUniform) {
  Architecture a;
  a.hidden_layers = 3;
  a.hidden_width = 128;
  const auto layers = WeightGaussianity(InitNetwork(a, 5));
  ASSERT_EQ(layers.size(), 3u);  // k x k matrices between hidden layers
  for (const LayerMoments& lm : layers) {
    EXPECT_EQ(lm.moments.count, 128 * 128);
    EXPECT_NEAR(lm.moments.excess_kurtosis, -1.2, 0.05);
    EXPECT_NEAR(lm.moments.skewness, 0.0, 0.05);
  }
  EXPECT_EQ(layers[0].layer, 1);
}

TEST(WeightGaussianityTest, TooFewWeights) {
  Architecture a;
  a.hidden_layers = 2;
  a.hidden_width = 3;
  EXPECT_THROW(WeightGaussianity(InitNetwork(a, 1)), InvalidArgument);
}

}  // namespace
}  // namespace sinr
