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
#include "sinr/train.h"

#include <cmath>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

Network SmallNet(ActivationKind kind, uint64_t seed) {
  Architecture a;
  a.input_dim = 2;
  a.output_dim = 1;
  a.hidden_layers = 2;
  a.hidden_width = 8;
  a.activation.kind = kind;
  Network net = InitNetwork(a, seed);
  SplitMix64 rng(seed + 1);
  for (auto& b : net.biases) {
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = rng.NextUniform(-0.1, 0.1);
  }
  return net;
}

Eigen::MatrixXd RandomMatrix(int rows, int cols, uint64_t seed, double lo,
                             double hi) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.NextUniform(lo, hi);
  }
  return m;
}

double Loss(const Network& net, const Eigen::MatrixXd& x,
            const Eigen::MatrixXd& t) {
  return (ForwardEncoded(net, x) - t).squaredNorm() / static_cast<double>(t.size());
}

// Central differences on every weight and bias.
void CheckGradients(ActivationKind kind) {
  const Network net = SmallNet(kind, 11);
  const Eigen::MatrixXd x = RandomMatrix(25, 2, 1, -1.0, 1.0);
  const Eigen::MatrixXd t = RandomMatrix(25, 1, 2, 0.0, 1.0);
  const LossAndGradients lg = ComputeLossAndGradients(net, x, t);
  EXPECT_NEAR(lg.loss, Loss(net, x, t), 1e-14);
  const double h = 1e-6;
  int checked = 0;
  auto check = [&](double analytic, auto perturb) {
    Network plus = net, minus = net;
    perturb(plus, h);
    perturb(minus, -h);
    const double numeric = (Loss(plus, x, t) - Loss(minus, x, t)) / (2 * h);
    const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-6});
    EXPECT_LT(std::abs(numeric - analytic) / scale, 1e-3)
        << "analytic " << analytic << " numeric " << numeric;
    ++checked;
  };
  for (int l = 0; l < net.arch.layer_count(); ++l) {
    for (Eigen::Index i = 0; i < net.weights[l].size(); ++i) {
      check(lg.grad.weights[l](i), [&](Network& n, double d) {
        n.weights[l](i) += d;
      });
    }
    for (Eigen::Index i = 0; i < net.biases[l].size(); ++i) {
      check(lg.grad.biases[l](i), [&](Network& n, double d) {
        n.biases[l](i) += d;
      });
    }
  }
  EXPECT_EQ(checked, static_cast<int>(net.ParameterCount()));
}

TEST(GradientTest, SineMatchesCentralDifferences) {
  CheckGradients(ActivationKind::kSine);
}
TEST(GradientTest, GaussianMatchesCentralDifferences) {
  CheckGradients(ActivationKind::kGaussian);
}
TEST(GradientTest, ReluMatchesCentralDifferences) {
  CheckGradients(ActivationKind::kRelu);
}

TEST(GradientTest, FloatKernelTracksDouble) {
  const Network net = SmallNet(ActivationKind::kSine, 3);
  const Eigen::MatrixXd x = RandomMatrix(50, 2, 5, -1.0, 1.0);
  const Eigen::MatrixXd t = RandomMatrix(50, 1, 6, 0.0, 1.0);
  const auto d = ComputeLossAndGradients(net, x, t, ComputePrecision::kFloat64);
  const auto f = ComputeLossAndGradients(net, x, t, ComputePrecision::kFloat32);
  EXPECT_NEAR(f.loss, d.loss, 1e-5 * d.loss);
  for (int l = 0; l < net.arch.layer_count(); ++l) {
    EXPECT_LT((f.grad.weights[l] - d.grad.weights[l]).norm(),
              1e-3 * d.grad.weights[l].norm() + 1e-9);
  }
}

TEST(TrainTest, FitsSmoothTargetAndIsDeterministic) {
  Architecture a;
  a.hidden_layers = 2;
  a.hidden_width = 32;
  const int dims[2] = {16, 16};
  const Eigen::MatrixXd coords = CoordinateGrid(dims);
  Eigen::MatrixXd target(coords.rows(), 1);
  for (Eigen::Index r = 0; r < coords.rows(); ++r) {
    target(r, 0) = 0.5 + 0.3 * coords(r, 0) * coords(r, 1);
  }
  TrainConfig cfg;
  cfg.epochs = 300;
  cfg.learning_rate = 1e-3;
  std::vector<double> seen;
  cfg.on_epoch = [&](int epoch, double loss) {
    EXPECT_EQ(epoch, static_cast<int>(seen.size()));
    seen.push_back(loss);
  };
  const TrainResult r1 = Train(InitNetwork(a, 7), coords, target, cfg);
  ASSERT_EQ(r1.loss_history.size(), 300u);
  EXPECT_EQ(seen, r1.loss_history);
  EXPECT_LT(r1.loss_history.back(), 1e-3 * r1.loss_history.front());
  cfg.on_epoch = nullptr;
  const TrainResult r2 = Train(InitNetwork(a, 7), coords, target, cfg);
  EXPECT_EQ(r1.net.weights, r2.net.weights);
  EXPECT_EQ(r1.loss_history, r2.loss_history);
}

TEST(TrainTest, MiniBatchesCoverEverySample) {
  Architecture a;
  a.activation.kind = ActivationKind::kGaussian;
  a.hidden_layers = 1;
  a.hidden_width = 16;
  const int dims[2] = {10, 10};
  const Eigen::MatrixXd coords = CoordinateGrid(dims);
  const Eigen::MatrixXd target = Eigen::MatrixXd::Constant(100, 1, 0.3);
  TrainConfig cfg;
  cfg.epochs = 40;
  cfg.learning_rate = 5e-3;
  cfg.batch_size = 32;
  cfg.seed = 9;
  const TrainResult r = Train(InitNetwork(a, 1), coords, target, cfg);
  EXPECT_LT(r.loss_history.back(), r.loss_history.front());
  const TrainResult again = Train(InitNetwork(a, 1), coords, target, cfg);
  EXPECT_EQ(r.net.weights, again.net.weights);
  cfg.seed = 10;
  EXPECT_NE(Train(InitNetwork(a, 1), coords, target, cfg).net.weights,
            r.net.weights);
}

TEST(TrainTest, RejectsBadInput) {
  Architecture a;
  a.hidden_width = 4;
  const Network net = InitNetwork(a, 1);
  const Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(5, 2);
  TrainConfig cfg;
  cfg.epochs = 1;
  EXPECT_THROW(Train(net, coords, Eigen::MatrixXd::Zero(4, 1), cfg),
               InvalidArgument);
  EXPECT_THROW(Train(net, coords, Eigen::MatrixXd::Zero(5, 2), cfg),
               InvalidArgument);
  Eigen::MatrixXd nan_target = Eigen::MatrixXd::Zero(5, 1);
  nan_target(2, 0) = std::nan("");
  EXPECT_THROW(Train(net, coords, nan_target, cfg), InvalidArgument);
  cfg.epochs = 0;
  EXPECT_THROW(Train(net, coords, Eigen::MatrixXd::Zero(5, 1), cfg),
               InvalidArgument);
  EXPECT_DOUBLE_EQ(DefaultLearningRate(ActivationKind::kSine), 1e-4);
  EXPECT_DOUBLE_EQ(DefaultLearningRate(ActivationKind::kRelu), 5e-3);
}

TEST(TrainTest, DivergenceRaisesNumericError) {
  Architecture a;
  a.activation.kind = ActivationKind::kRelu;
  a.hidden_width = 8;
  const int dims[2] = {4, 4};
  const Eigen::MatrixXd coords = CoordinateGrid(dims);
  const Eigen::MatrixXd target = Eigen::MatrixXd::Constant(16, 1, 1e300);
  TrainConfig cfg;
  cfg.epochs = 5;
  EXPECT_THROW(Train(InitNetwork(a, 1), coords, target, cfg), NumericError);
}

}  // namespace
}  // namespace sinr
