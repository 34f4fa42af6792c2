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

#ifndef SINR_TRAIN_H_
#define SINR_TRAIN_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sinr/network.h"

namespace sinr {

enum class LossKind : uint8_t { kMse = 0 };

// Precision of the forward/backward kernel used while training. Parameters
// and optimizer state are always kept in double.
enum class ComputePrecision : uint8_t { kFloat32, kFloat64 };

struct TrainConfig {
  int epochs = 2000;
  double learning_rate = 1e-4;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  // 0 trains full batch. Otherwise every epoch is one pass over a shuffled
  // permutation of the samples in batches of this size.
  int batch_size = 0;
  uint64_t seed = 0;
  LossKind loss = LossKind::kMse;
  ComputePrecision precision = ComputePrecision::kFloat32;
  // Called after every epoch with (epoch, loss before the update).
  std::function<void(int, double)> on_epoch;

  void Validate() const;
};

// Default Adam learning rate for an activation: 1e-4 for sine, 5e-3 for the
// others.
double DefaultLearningRate(ActivationKind kind);

struct Gradients {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

struct LossAndGradients {
  double loss = 0.0;
  Gradients grad;
};

// MSE = sum ||G(x) - t||^2 / (N * b) and its gradient with respect to every
// weight and bias, by reverse-mode differentiation of the forward pass.
// `inputs` must already be positionally encoded if the net uses encoding.
LossAndGradients ComputeLossAndGradients(
    const Network& net, const Eigen::MatrixXd& inputs,
    const Eigen::MatrixXd& targets,
    ComputePrecision precision = ComputePrecision::kFloat64);

struct TrainResult {
  Network net;
  std::vector<double> loss_history;
};

// Adam on the MSE, full batch or minibatch per cfg.batch_size. `coords` are raw coordinates (N x input_dim);
// encoding is applied internally. Throws NumericError if the loss stops being
// finite and InvalidArgument on bad shapes or non-finite targets.
TrainResult Train(Network net, const Eigen::MatrixXd& coords,
                  const Eigen::MatrixXd& targets, const TrainConfig& cfg);

}  // namespace sinr

#endif  // SINR_TRAIN_H_
