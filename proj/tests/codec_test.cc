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
#include "sinr/codec.h"

#include <cmath>

#include <gtest/gtest.h>

#include "sinr/container.h"
#include "sinr/dictionary.h"
#include "sinr/entropy.h"
#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

constexpr int kFactor = 4;

Architecture SmallArch(int width) {
  Architecture a;
  a.input_dim = 2;
  a.output_dim = 1;
  a.hidden_layers = 1;
  a.hidden_width = width;
  return a;
}

// Every weight vector is an exact s-sparse combination of its layer's atoms.
Network PlantedNet(int width, int s, uint64_t master_seed) {
  Network net = InitNetwork(SmallArch(width), 3);
  SplitMix64 rng(99);
  for (int l = 0; l < net.arch.layer_count(); ++l) {
    Eigen::MatrixXd& w = net.weights[l];
    const int rows = static_cast<int>(w.rows());
    const int cols = static_cast<int>(w.cols());
    const CodingMode mode = ChooseMode(rows, cols, 50);
    const int k1 = VectorLength(mode, rows, cols);
    const int n = VectorCount(mode, rows, cols);
    const Dictionary dict =
        Dictionary::Sample(LayerSeed(master_seed, l), k1, kFactor * k1);
    Eigen::MatrixXd vectors(k1, n);
    for (int v = 0; v < n; ++v) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(dict.k2());
      for (int t = 0; t < s; ++t) {
        const auto j = static_cast<int>(rng.Next() % dict.k2());
        x(j) = (rng.NextUniform() < 0.5 ? -1.0 : 1.0) * rng.NextUniform(0.5, 1.5);
      }
      vectors.col(v) = dict.atoms() * x;
    }
    w = AssembleLayer(vectors, mode, rows, cols);
  }
  return net;
}

double RelativeDifference(const Network& a, const Network& b) {
  double worst = 0.0;
  for (size_t l = 0; l < a.weights.size(); ++l) {
    worst = std::max(worst, (a.weights[l] - b.weights[l]).norm() /
                                a.weights[l].norm());
    worst = std::max(worst, (a.biases[l] - b.biases[l]).norm() /
                                std::max(a.biases[l].norm(), 1e-30));
  }
  return worst;
}

CompressConfig Planted(bool lossless) {
  CompressConfig cfg;
  cfg.s_per_layer = {5};
  cfg.k2_factor = kFactor;
  cfg.master_seed = 1234;
  cfg.lossless = lossless;
  return cfg;
}

TEST(CodecTest, LosslessPlantedRoundTrip) {
  const Network net = PlantedNet(64, 5, 1234);
  const CompressResult r = CompressInr(net, Planted(true));
  const Network back = DecompressInr(r.bytes);
  EXPECT_EQ(back.arch, net.arch);
  EXPECT_LT(RelativeDifference(net, back), 1e-6);
  EXPECT_LT(r.report.worst_rel_err, 1e-6);
  for (const LayerReport& l : r.report.layers) {
    EXPECT_FALSE(l.dense);
    EXPECT_EQ(l.s, 5);
    EXPECT_EQ(l.k2, kFactor * l.k1);
  }
}

TEST(CodecTest, WrongSeedDoesNotDecode) {
  const Network net = PlantedNet(64, 5, 1234);
  CompressResult r = CompressInr(net, Planted(true));
  CompressedInr c = r.container;
  c.master_seed ^= 1;
  EXPECT_GT(RelativeDifference(net, ContainerToNetwork(c)), 0.5);
}

TEST(CodecTest, CompressionIsDeterministic) {
  const Network net = InitNetwork(SmallArch(64), 8);
  CompressConfig cfg;
  cfg.k2_factor = kFactor;
  const auto a = CompressInr(net, cfg).bytes;
  const auto b = CompressInr(net, cfg).bytes;
  EXPECT_EQ(a, b);
  cfg.master_seed = 1;
  EXPECT_NE(CompressInr(net, cfg).bytes, a);
}

TEST(CodecTest, QuantizedErrorWithinSparsePlusStepBound) {
  const Network net = InitNetwork(SmallArch(64), 5);
  CompressConfig cfg;
  cfg.s_per_layer = {12};
  cfg.k2_factor = kFactor;
  cfg.bitwidth = 10;
  const CompressResult r = CompressInr(net, cfg);
  for (const LayerReport& l : r.report.layers) {
    const Eigen::MatrixXd vectors = LayerVectors(net.weights[l.layer], l.mode);
    const double min_norm = vectors.colwise().norm().minCoeff();
    // Unit-norm atoms: each of the s dequantized values moves the vector by
    // at most one half step.
    const double bound = l.sparse_rel_err + l.s * l.value_half_step / min_norm;
    EXPECT_LE(l.decoded_rel_err, bound * (1 + 1e-9)) << "layer " << l.layer;
    EXPECT_GT(l.value_half_step, 0.0);
  }
}

TEST(CodecTest, SweepMeetsToleranceOrFallsBackToDense) {
  const Network net = InitNetwork(SmallArch(64), 6);
  CompressConfig cfg;
  cfg.k2_factor = kFactor;
  cfg.rel_tol = 0.3;
  cfg.input_rel_tol = 1e-4;
  const CompressResult r = CompressInr(net, cfg);
  ASSERT_EQ(r.report.layers.size(), 3u);
  EXPECT_TRUE(r.report.layers[0].dense);
  EXPECT_FALSE(r.report.layers[0].met);
  EXPECT_EQ(r.container.layers[0].mode, LayerMode::kDense);
  for (int l = 1; l < 3; ++l) {
    EXPECT_FALSE(r.report.layers[l].dense);
    EXPECT_TRUE(r.report.layers[l].met);
    EXPECT_LE(r.report.layers[l].sparse_rel_err, 0.3);
  }
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(net.arch, 1), 0.3);
  cfg.dense_fallback = false;
  const CompressResult sparse = CompressInr(net, cfg);
  EXPECT_FALSE(sparse.report.layers[0].dense);
  EXPECT_EQ(sparse.report.layers[0].s, 31);  // largest s with 2s < 64
}

TEST(CodecTest, InputToleranceScalesWithActivation) {
  CompressConfig cfg;
  Architecture sine = SmallArch(64);
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(sine, 0), 0.02 / 30.0);
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(sine, 1), 0.02);
  Architecture gauss = sine;
  gauss.activation.kind = ActivationKind::kGaussian;
  gauss.activation.sigma = 8.0;
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(gauss, 0), 0.02 / 8.0);
  Architecture relu = sine;
  relu.activation.kind = ActivationKind::kRelu;
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(relu, 0), 0.02);
  cfg.input_rel_tol = 0.001;
  EXPECT_DOUBLE_EQ(cfg.LayerTolerance(sine, 0), 0.001);
}

TEST(CodecTest, ReportCountsParameters) {
  const Network net = PlantedNet(64, 5, 1234);
  const CompressResult r = CompressInr(net, Planted(false));
  EXPECT_EQ(r.report.s_ref, 5);
  const ParameterCounts pc = CountParameters(net.arch, 5);
  EXPECT_EQ(r.report.t_s, pc.t_s);
  EXPECT_EQ(r.report.t_sinr, pc.t_sinr);
  EXPECT_EQ(r.report.raw_weights, 64 * 2 + 64 * 64 + 64);
  EXPECT_EQ(r.report.stored_scalars, 2 * 5 * (2 + 64 + 1));
  EXPECT_EQ(r.report.bytes, r.bytes.size());
}

TEST(CodecTest, RejectsBadConfig) {
  const Network net = InitNetwork(SmallArch(64), 1);
  CompressConfig cfg;
  cfg.bitwidth = 17;
  EXPECT_THROW(CompressInr(net, cfg), InvalidArgument);
  cfg = {};
  cfg.rel_tol = 0.0;
  EXPECT_THROW(CompressInr(net, cfg), InvalidArgument);
  cfg = {};
  cfg.s_per_layer = {3, 3};
  EXPECT_THROW(CompressInr(net, cfg), InvalidArgument);
  cfg = {};
  cfg.k2_factor = 4;
  cfg.s_per_layer = {32};
  EXPECT_THROW(CompressInr(net, cfg), BudgetError);
}

TEST(CodecTest, CorruptedStreamsThrowFormatError) {
  const Network net = PlantedNet(64, 5, 1234);
  const std::vector<uint8_t> bytes = CompressInr(net, Planted(false)).bytes;
  for (size_t cut : {size_t{0}, size_t{1}, bytes.size() / 2, bytes.size() - 1}) {
    EXPECT_THROW(DecompressInr(std::span(bytes.data(), cut)), FormatError);
  }
  int failures = 0;
  for (size_t i = 0; i < bytes.size(); i += 7) {
    auto bad = bytes;
    bad[i] ^= 0x5a;
    try {
      DecompressInr(bad);
    } catch (const FormatError&) {
      ++failures;
    }
  }
  EXPECT_EQ(failures, static_cast<int>((bytes.size() + 6) / 7));
}

TEST(CodecTest, CheckpointIsExact) {
  Architecture a = SmallArch(20);
  a.activation.kind = ActivationKind::kGaussian;
  a.positional_encoding_levels = 3;
  const Network net = InitNetwork(a, 77);
  const Network back = DecompressInr(EncodeCheckpoint(net));
  EXPECT_EQ(back.arch, net.arch);
  EXPECT_EQ(back.weights, net.weights);
  EXPECT_EQ(back.biases, net.biases);
}

TEST(CodecTest, BaselineIsDenseQuantized) {
  const Network net = InitNetwork(SmallArch(64), 2);
  const std::vector<uint8_t> bytes = EncodeBaseline(net, 16);
  const CompressedInr c = Deserialize(EntropyUnwrap(bytes));
  for (const LayerRecord& r : c.layers) EXPECT_EQ(r.mode, LayerMode::kDense);
  const Network back = ContainerToNetwork(c);
  for (size_t l = 0; l < net.weights.size(); ++l) {
    const double range = net.weights[l].maxCoeff() - net.weights[l].minCoeff();
    EXPECT_LE((net.weights[l] - back.weights[l]).cwiseAbs().maxCoeff(),
              range / 65535.0);
  }
}

}  // namespace
}  // namespace sinr
