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
#include "sinr/network.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sinr/errors.h"

namespace sinr {
namespace {

TEST(NetworkTest, CoordinateGridLastAxisFastest) {
  const int dims[2] = {2, 3};
  const Eigen::MatrixXd g = CoordinateGrid(dims);
  ASSERT_EQ(g.rows(), 6);
  ASSERT_EQ(g.cols(), 2);
  const double expect[6][2] = {{-1, -1}, {-1, 0}, {-1, 1},
                               {1, -1},  {1, 0},  {1, 1}};
  for (int r = 0; r < 6; ++r) {
    EXPECT_DOUBLE_EQ(g(r, 0), expect[r][0]);
    EXPECT_DOUBLE_EQ(g(r, 1), expect[r][1]);
  }
  const int bad[1] = {1};
  EXPECT_THROW(CoordinateGrid(bad), InvalidArgument);
  const int four[4] = {2, 2, 2, 2};
  EXPECT_THROW(CoordinateGrid(four), InvalidArgument);
}

TEST(NetworkTest, PositionalEncodingValues) {
  Eigen::MatrixXd c(1, 2);
  c << 0.25, -0.5;
  const Eigen::MatrixXd e = PositionalEncoding(c, 2);
  ASSERT_EQ(e.cols(), 8);
  const double pi = std::numbers::pi;
  const double expect[8] = {std::sin(pi * 0.25),  std::cos(pi * 0.25),
                            std::sin(2 * pi * 0.25), std::cos(2 * pi * 0.25),
                            std::sin(-pi * 0.5),  std::cos(-pi * 0.5),
                            std::sin(-2 * pi * 0.5), std::cos(-2 * pi * 0.5)};
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(e(0, i), expect[i], 1e-15);
  EXPECT_THROW(PositionalEncoding(c, 0), InvalidArgument);
}

TEST(NetworkTest, ShapesAndParameterCount) {
  Architecture a;
  a.input_dim = 2;
  a.output_dim = 3;
  a.hidden_layers = 2;
  a.hidden_width = 16;
  EXPECT_EQ(a.layer_count(), 4);
  EXPECT_EQ(a.LayerShape(0), std::make_pair(16, 2));
  EXPECT_EQ(a.LayerShape(1), std::make_pair(16, 16));
  EXPECT_EQ(a.LayerShape(3), std::make_pair(3, 16));
  a.positional_encoding_levels = 4;
  EXPECT_EQ(a.encoded_input_dim(), 16);
  EXPECT_EQ(a.LayerShape(0), std::make_pair(16, 16));
  const Network net = InitNetwork(a, 1);
  EXPECT_EQ(net.ParameterCount(), 16 * 16 + 16 + 16 * 16 * 2 + 32 + 48 + 3);
}

TEST(NetworkTest, SineInitRanges) {
  Architecture a;
  a.hidden_width = 64;
  const Network net = InitNetwork(a, 3);
  EXPECT_LE(net.weights[0].cwiseAbs().maxCoeff(), 1.0 / 2);
  const double hidden = std::sqrt(6.0 / 64) / 30.0;
  for (int i = 1; i < a.layer_count(); ++i) {
    EXPECT_LE(net.weights[i].cwiseAbs().maxCoeff(), hidden);
    EXPECT_GT(net.weights[i].cwiseAbs().maxCoeff(), 0.9 * hidden);
    EXPECT_EQ(net.biases[i].norm(), 0.0);
  }
  EXPECT_EQ(InitNetwork(a, 3).weights[2], net.weights[2]);
  EXPECT_NE(InitNetwork(a, 4).weights[2], net.weights[2]);
}

TEST(NetworkTest, ReluInitRange) {
  Architecture a;
  a.activation.kind = ActivationKind::kRelu;
  a.hidden_width = 32;
  const Network net = InitNetwork(a, 3);
  EXPECT_LE(net.weights[1].cwiseAbs().maxCoeff(), std::sqrt(6.0 / 32));
  EXPECT_LE(net.weights[0].cwiseAbs().maxCoeff(), std::sqrt(6.0 / 2));
}

// Direct per-sample evaluation as an oracle for the batched forward pass.
double Manual(const Network& net, const Eigen::VectorXd& x) {
  Eigen::VectorXd h = x;
  const Activation& act = net.arch.activation;
  for (int i = 0; i < net.arch.layer_count(); ++i) {
    Eigen::VectorXd z = net.weights[i] * h + net.biases[i];
    if (i + 1 == net.arch.layer_count()) return z(0);
    for (Eigen::Index j = 0; j < z.size(); ++j) {
      switch (act.kind) {
        case ActivationKind::kSine: z(j) = std::sin(act.omega0 * z(j)); break;
        case ActivationKind::kGaussian:
          z(j) = std::exp(-std::pow(act.sigma * z(j), 2));
          break;
        case ActivationKind::kRelu: z(j) = std::max(0.0, z(j)); break;
      }
    }
    h = z;
  }
  return 0.0;
}

TEST(NetworkTest, ForwardMatchesPerSampleOracle) {
  for (auto kind : {ActivationKind::kSine, ActivationKind::kGaussian,
                    ActivationKind::kRelu}) {
    Architecture a;
    a.activation.kind = kind;
    a.hidden_layers = 2;
    a.hidden_width = 9;
    Network net = InitNetwork(a, 5);
    for (auto& b : net.biases) b.setConstant(0.01);
    const int dims[2] = {4, 5};
    const Eigen::MatrixXd coords = CoordinateGrid(dims);
    const Eigen::MatrixXd out = Forward(net, coords);
    ASSERT_EQ(out.rows(), 20);
    for (int r = 0; r < 20; ++r) {
      EXPECT_NEAR(out(r, 0), Manual(net, coords.row(r).transpose()), 1e-12);
    }
  }
}

TEST(NetworkTest, NonFiniteActivationNamesLayer) {
  Architecture a;
  a.activation.kind = ActivationKind::kRelu;
  a.hidden_layers = 2;
  a.hidden_width = 4;
  Network net = InitNetwork(a, 1);
  net.weights[1].setConstant(1e200);
  net.weights[2].setConstant(1e200);
  net.biases[0].setConstant(1.0);
  try {
    Forward(net, Eigen::MatrixXd::Ones(3, 2));
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("layer 2"), std::string::npos)
        << e.what();
  }
}

TEST(NetworkTest, ValidateCatchesBrokenNetworks) {
  Architecture a;
  a.hidden_width = 8;
  Network net = InitNetwork(a, 1);
  EXPECT_NO_THROW(net.Validate());
  Network bad = net;
  bad.weights[1].resize(7, 8);
  EXPECT_THROW(bad.Validate(), InvalidArgument);
  bad = net;
  bad.biases.pop_back();
  EXPECT_THROW(bad.Validate(), InvalidArgument);
  bad = net;
  bad.weights[0](0, 0) = std::nan("");
  EXPECT_THROW(bad.Validate(), NumericError);
  Architecture neg = a;
  neg.hidden_layers = -1;
  EXPECT_THROW(neg.Validate(), InvalidArgument);
  EXPECT_THROW(ParseActivation("tanh"), InvalidArgument);
  EXPECT_EQ(ParseActivation("gaussian"), ActivationKind::kGaussian);
}

}  // namespace
}  // namespace sinr
