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

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

Eigen::MatrixXd Gaussian(int rows, int cols, uint64_t seed) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.NextGaussianPair().first;
  }
  return m;
}

TEST(LayerCodingTest, ModeFollowsWidthThreshold) {
  EXPECT_EQ(ChooseMode(128, 128, 50), CodingMode::kPerVector);
  EXPECT_EQ(ChooseMode(128, 2, 50), CodingMode::kPerVector);
  EXPECT_EQ(ChooseMode(1, 128, 50), CodingMode::kPerVector);
  EXPECT_EQ(ChooseMode(50, 50, 50), CodingMode::kPerVector);
  EXPECT_EQ(ChooseMode(49, 49, 50), CodingMode::kFlattened);
  EXPECT_EQ(ChooseMode(32, 32, 50), CodingMode::kFlattened);
  EXPECT_EQ(ChooseMode(32, 2, 50), CodingMode::kFlattened);
}

TEST(LayerCodingTest, VectorGroupingMatchesParameterFormula) {
  // (a=2, b=3, k=128): a vectors in, k per hidden matrix, b out, all of
  // length k.
  EXPECT_EQ(VectorLength(CodingMode::kPerVector, 128, 2), 128);
  EXPECT_EQ(VectorCount(CodingMode::kPerVector, 128, 2), 2);
  EXPECT_EQ(VectorLength(CodingMode::kPerVector, 128, 128), 128);
  EXPECT_EQ(VectorCount(CodingMode::kPerVector, 128, 128), 128);
  EXPECT_EQ(VectorLength(CodingMode::kPerVector, 3, 128), 128);
  EXPECT_EQ(VectorCount(CodingMode::kPerVector, 3, 128), 3);
  EXPECT_EQ(VectorLength(CodingMode::kFlattened, 32, 32), 1024);
  EXPECT_EQ(VectorCount(CodingMode::kFlattened, 32, 32), 1);
}

TEST(LayerCodingTest, LayoutRoundTrips) {
  for (auto [rows, cols] : {std::pair{6, 4}, std::pair{4, 6}, std::pair{5, 5}}) {
    const Eigen::MatrixXd w = Gaussian(rows, cols, rows * 10 + cols);
    for (CodingMode mode : {CodingMode::kPerVector, CodingMode::kFlattened}) {
      const Eigen::MatrixXd v = LayerVectors(w, mode);
      EXPECT_EQ(v.rows(), VectorLength(mode, rows, cols));
      EXPECT_EQ(v.cols(), VectorCount(mode, rows, cols));
      EXPECT_EQ(AssembleLayer(v, mode, rows, cols), w);
    }
  }
}

TEST(LayerCodingTest, FlattenIsRowMajor) {
  Eigen::MatrixXd w(2, 3);
  w << 1, 2, 3, 4, 5, 6;
  const Eigen::MatrixXd v = LayerVectors(w, CodingMode::kFlattened);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(v(i, 0), i + 1);
}

TEST(LayerCodingTest, SeedIsMasterXorIndex) {
  EXPECT_EQ(LayerSeed(0xF0, 3), 0xF3u);
  EXPECT_EQ(LayerSeed(5, 5), 0u);
}

TEST(LayerCodingTest, DictionaryWidthIsCapped) {
  EXPECT_EQ(DictionaryWidth(128, 2), 256);
  EXPECT_EQ(DictionaryWidth(128, 512), 65536);
  EXPECT_EQ(DictionaryWidth(1024, 512), 65536);
  EXPECT_THROW(DictionaryWidth(65536, 2), InvalidArgument);
  EXPECT_THROW(DictionaryWidth(10, 1), InvalidArgument);
}

TEST(LayerCodingTest, EncodeDecodeMatchesOmpError) {
  const Eigen::MatrixXd w = Gaussian(60, 60, 1);
  LayerCodingOptions opts;
  opts.k2_factor = 8;
  opts.master_seed = 99;
  const LayerCoding c = EncodeLayer(w, 2, 20, opts);
  EXPECT_EQ(c.mode, CodingMode::kPerVector);
  EXPECT_EQ(c.k1, 60);
  EXPECT_EQ(c.k2, 480);
  EXPECT_EQ(c.seed, 99u ^ 2u);
  ASSERT_EQ(c.codes.size(), 60u);
  const Eigen::MatrixXd back = DecodeLayer(c);
  double worst = 0.0;
  for (int j = 0; j < 60; ++j) {
    worst = std::max(worst, (back.col(j) - w.col(j)).norm() / w.col(j).norm());
  }
  EXPECT_NEAR(worst, c.worst_rel_err, 1e-9);
  EXPECT_LT(worst, 1.0);
}

TEST(LayerCodingTest, BudgetViolationNamesLayer) {
  const Eigen::MatrixXd w = Gaussian(8, 8, 2);  // flattened, k1 = 64
  LayerCodingOptions opts;
  try {
    EncodeLayer(w, 4, 32, opts);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("layer 4"), std::string::npos);
  }
  EXPECT_NO_THROW(EncodeLayer(w, 4, 31, opts));
}

TEST(LayerCodingTest, SweepGridCoversFeasibleRange) {
  EXPECT_EQ(SweepGrid(10), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(SweepGrid(3), (std::vector<int>{1}));
  const std::vector<int> g = SweepGrid(1024);
  EXPECT_EQ(g.front(), 2);
  EXPECT_EQ(g[1] - g[0], 16);
  EXPECT_EQ(g.back(), 511);
  EXPECT_THROW(SweepGrid(2), BudgetError);
}

TEST(LayerCodingTest, SweepPicksSmallestPassingGridPoint) {
  const Eigen::MatrixXd w = Gaussian(64, 64, 3);
  LayerCodingOptions opts;
  opts.k2_factor = 16;
  const SweepResult full = SweepS(w, 1, 0.3, opts, /*full_curve=*/true);
  ASSERT_TRUE(full.met);
  for (size_t i = 1; i < full.curve.size(); ++i) {
    EXPECT_LE(full.curve[i].rel_err, full.curve[i - 1].rel_err + 1e-12);
  }
  for (const SweepPoint& p : full.curve) {
    if (p.s < full.s_opt) EXPECT_GT(p.rel_err, 0.3);
  }
  EXPECT_LE(full.achieved_rel_err, 0.3);
  EXPECT_EQ(full.coding.s, full.s_opt);
  const SweepResult quick = SweepS(w, 1, 0.3, opts);
  EXPECT_EQ(quick.s_opt, full.s_opt);
  EXPECT_EQ(quick.coding.codes, full.coding.codes);
  EXPECT_LT(quick.curve.size(), full.curve.size());
}

TEST(LayerCodingTest, SweepReportsUnmetTolerance) {
  const Eigen::MatrixXd w = Gaussian(60, 60, 4);
  LayerCodingOptions opts;
  opts.k2_factor = 2;
  const SweepResult r = SweepS(w, 0, 1e-9, opts);
  EXPECT_FALSE(r.met);
  EXPECT_EQ(r.s_opt, 29);
  EXPECT_EQ(r.coding.s, 29);
}

TEST(LayerCodingTest, TinyLayerIsFlattened) {
  const Eigen::MatrixXd w = Gaussian(32, 32, 5);
  LayerCodingOptions opts;
  opts.k2_factor = 4;
  const LayerCoding c = EncodeLayer(w, 1, 100, opts);
  EXPECT_EQ(c.mode, CodingMode::kFlattened);
  EXPECT_EQ(c.k1, 1024);
  EXPECT_EQ(c.codes.size(), 1u);
}

TEST(ParameterCountsTest, PublishedExamples) {
  Architecture big;
  big.input_dim = 2;
  big.output_dim = 3;
  big.hidden_layers = 3;
  big.hidden_width = 128;
  // a k + l k^2 + b k = 256 + 49152 + 384; 2s (a + k l + b) = 40 * 389.
  EXPECT_EQ(CountParameters(big, 20).t_s, 49792);
  EXPECT_EQ(CountParameters(big, 20).t_sinr, 15560);
  Architecture tiny = big;
  tiny.hidden_layers = 2;
  tiny.hidden_width = 32;
  EXPECT_EQ(CountParameters(tiny, 8).t_s, 2208);
  EXPECT_EQ(CountParameters(tiny, 8).t_sinr, 1104);
}

TEST(ParameterCountsTest, HalfWidthSparsityMatchesHiddenTerm) {
  Architecture arch;
  arch.hidden_layers = 4;
  arch.hidden_width = 64;
  const ParameterCounts c = CountParameters(arch, 32);
  const int64_t a = arch.input_dim, b = arch.output_dim;
  EXPECT_EQ(c.t_s - (a + b) * 64, c.t_sinr - (a + b) * 64);
}

TEST(ParameterCountsTest, RandomArchitecturesAgainstFormula) {
  SplitMix64 rng(17);
  for (int i = 0; i < 50; ++i) {
    Architecture arch;
    arch.input_dim = 1 + static_cast<int>(rng.Next() % 3);
    arch.output_dim = 1 + static_cast<int>(rng.Next() % 3);
    arch.hidden_layers = 1 + static_cast<int>(rng.Next() % 6);
    arch.hidden_width = 2 + static_cast<int>(rng.Next() % 300);
    const int s = 1 + static_cast<int>(rng.Next() % 100);
    int64_t t_s = 0;
    for (int layer = 0; layer < arch.layer_count(); ++layer) {
      const auto [r, c] = arch.LayerShape(layer);
      t_s += int64_t{r} * c;
    }
    const ParameterCounts got = CountParameters(arch, s);
    EXPECT_EQ(got.t_s, t_s);
    int64_t t_sinr = 0;
    for (int v = 0; v < arch.input_dim + arch.output_dim +
                            arch.hidden_layers * arch.hidden_width;
         ++v) {
      t_sinr += 2 * s;
    }
    EXPECT_EQ(got.t_sinr, t_sinr);
  }
  EXPECT_THROW(CountParameters(Architecture{}, 0), InvalidArgument);
}

}  // namespace
}  // namespace sinr
