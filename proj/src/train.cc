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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

#include "sinr/errors.h"
#include "sinr/rng.h"

#if defined(__SSE2__)
#include <xmmintrin.h>
#endif

namespace sinr {
namespace {

// Flushes subnormal results and operands to zero while alive. Gaussian
// activations underflow into the float32 subnormal range, where x86 arithmetic
// is two orders of magnitude slower.
class FlushSubnormals {
 public:
#if defined(__SSE2__)
  FlushSubnormals() : saved_(_mm_getcsr()) { _mm_setcsr(saved_ | 0x8040); }
  ~FlushSubnormals() { _mm_setcsr(saved_); }

 private:
  unsigned int saved_;
#endif
};

// Forward/backward workspace for one precision. Activations of every layer
// are kept for the backward pass.
template <typename T>
class Backprop {
 public:
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

  Backprop(const Eigen::MatrixXd& inputs, const Eigen::MatrixXd& targets)
      : inputs_(inputs.template cast<T>()),
        targets_(targets.template cast<T>()) {}

  // Restricts the next Run() calls to the given sample rows of the full set.
  void SelectRows(const Mat& all_inputs, const Mat& all_targets,
                  std::span<const int> rows) {
    inputs_.resize(static_cast<Eigen::Index>(rows.size()), all_inputs.cols());
    targets_.resize(static_cast<Eigen::Index>(rows.size()), all_targets.cols());
    for (size_t r = 0; r < rows.size(); ++r) {
      inputs_.row(r) = all_inputs.row(rows[r]);
      targets_.row(r) = all_targets.row(rows[r]);
    }
  }

  const Mat& inputs() const { return inputs_; }
  const Mat& targets() const { return targets_; }

  double Run(const Network& net, Gradients* grad) {
    const int layers = net.arch.layer_count();
    const Activation& act = net.arch.activation;
    const T omega = static_cast<T>(act.omega0);
    const T sigma = static_cast<T>(act.sigma);
    weights_.resize(layers);
    pre_.resize(layers);
    post_.resize(layers);
    for (int i = 0; i < layers; ++i) {
      weights_[i] = net.weights[i].template cast<T>();
      const Mat& in = i == 0 ? inputs_ : post_[i - 1];
      Mat& z = pre_[i];
      z.noalias() = in * weights_[i].transpose();
      z.rowwise() += net.biases[i].template cast<T>().transpose();
      if (i + 1 == layers) break;
      Mat& h = post_[i];
      switch (act.kind) {
        case ActivationKind::kSine:
          h = (z.array() * omega).sin().matrix();
          break;
        case ActivationKind::kGaussian:
          h = (-(z.array() * sigma).square()).exp().matrix();
          break;
        case ActivationKind::kRelu:
          h = z.cwiseMax(T(0));
          break;
      }
    }

    const Mat& out = pre_[layers - 1];
    const double count = static_cast<double>(out.size());
    diff_ = out - targets_;
    const double loss = diff_.template cast<double>().squaredNorm() / count;
    if (grad == nullptr) return loss;

    grad->weights.resize(layers);
    grad->biases.resize(layers);
    Mat& dz = dz_;
    dz = diff_ * static_cast<T>(2.0 / count);
    for (int i = layers - 1; i >= 0; --i) {
      const Mat& in = i == 0 ? inputs_ : post_[i - 1];
      grad->weights[i] = (dz.transpose() * in).template cast<double>();
      grad->biases[i] =
          dz.colwise().sum().transpose().template cast<double>();
      if (i == 0) break;
      Mat& dh = dh_;
      dh.noalias() = dz * weights_[i];
      const Mat& zp = pre_[i - 1];
      switch (act.kind) {
        case ActivationKind::kSine:
          dz = (dh.array() * (zp.array() * omega).cos() * omega).matrix();
          break;
        case ActivationKind::kGaussian:
          dz = (dh.array() * post_[i - 1].array() * zp.array() *
                (T(-2) * sigma * sigma))
                   .matrix();
          break;
        case ActivationKind::kRelu:
          dz = (dh.array() * (zp.array() > T(0)).template cast<T>()).matrix();
          break;
      }
    }
    return loss;
  }

 private:
  Mat inputs_;
  Mat targets_;
  Mat diff_;
  Mat dz_;
  Mat dh_;
  std::vector<Mat> weights_;
  std::vector<Mat> pre_;
  std::vector<Mat> post_;
};

void CheckShapes(const Network& net, const Eigen::MatrixXd& inputs,
                 const Eigen::MatrixXd& targets) {
  net.Validate();
  if (inputs.rows() < 1 || inputs.rows() != targets.rows()) {
    throw InvalidArgument("need at least one sample and matching row counts");
  }
  if (inputs.cols() != net.arch.encoded_input_dim()) {
    throw InvalidArgument("input width does not match the first layer");
  }
  if (targets.cols() != net.arch.output_dim) {
    throw InvalidArgument("target width does not match the output layer");
  }
  if (!targets.allFinite()) {
    throw InvalidArgument("training targets must be finite");
  }
}

template <typename T>
TrainResult TrainWith(Network net, const Eigen::MatrixXd& inputs,
                      const Eigen::MatrixXd& targets, const TrainConfig& cfg) {
  Backprop<T> backprop(inputs, targets);
  const int n = static_cast<int>(inputs.rows());
  const bool batched = cfg.batch_size > 0 && cfg.batch_size < n;
  typename Backprop<T>::Mat all_inputs, all_targets;
  std::vector<int> order;
  if (batched) {
    all_inputs = backprop.inputs();
    all_targets = backprop.targets();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  SplitMix64 rng(cfg.seed);
  const int layers = net.arch.layer_count();
  std::vector<Eigen::MatrixXd> m_w(layers), v_w(layers);
  std::vector<Eigen::VectorXd> m_b(layers), v_b(layers);
  for (int i = 0; i < layers; ++i) {
    m_w[i] = v_w[i] = Eigen::MatrixXd::Zero(net.weights[i].rows(),
                                            net.weights[i].cols());
    m_b[i] = v_b[i] = Eigen::VectorXd::Zero(net.biases[i].size());
  }

  TrainResult result;
  result.loss_history.reserve(cfg.epochs);
  Gradients grad;
  double beta1_pow = 1.0;
  double beta2_pow = 1.0;
  const double b1 = cfg.adam_beta1;
  const double b2 = cfg.adam_beta2;
  auto adam_step = [&]() {
    beta1_pow *= b1;
    beta2_pow *= b2;
    const double step = cfg.learning_rate / (1.0 - beta1_pow);
    const double v_scale = 1.0 / (1.0 - beta2_pow);
    auto update = [&](auto& param, auto& m, auto& v, const auto& g) {
      m = b1 * m + (1.0 - b1) * g;
      v = b2 * v + (1.0 - b2) * g.cwiseProduct(g);
      param.array() -=
          step * m.array() / ((v.array() * v_scale).sqrt() + cfg.adam_eps);
    };
    for (int i = 0; i < layers; ++i) {
      update(net.weights[i], m_w[i], v_w[i], grad.weights[i]);
      update(net.biases[i], m_b[i], v_b[i], grad.biases[i]);
    }
  };
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss = 0.0;
    if (!batched) {
      loss = backprop.Run(net, &grad);
      if (std::isfinite(loss)) adam_step();
    } else {
      // Fisher-Yates with the training seed; the epoch loss is the
      // sample-weighted mean of the batch losses.
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.Next() % static_cast<uint64_t>(i + 1)]);
      }
      for (int first = 0; first < n && std::isfinite(loss);
           first += cfg.batch_size) {
        const int count = std::min(cfg.batch_size, n - first);
        backprop.SelectRows(all_inputs, all_targets,
                            std::span<const int>(order).subspan(first, count));
        const double batch_loss = backprop.Run(net, &grad);
        loss += batch_loss * count / n;
        if (std::isfinite(batch_loss)) adam_step();
      }
    }
    if (!std::isfinite(loss)) {
      throw NumericError("training loss became non-finite at epoch " +
                         std::to_string(epoch));
    }
    result.loss_history.push_back(loss);
    if (cfg.on_epoch) cfg.on_epoch(epoch, loss);
  }
  result.net = std::move(net);
  return result;
}

}  // namespace

void TrainConfig::Validate() const {
  if (epochs < 1) throw InvalidArgument("epochs must be positive");
  if (batch_size < 0) throw InvalidArgument("batch size must be >= 0");
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning rate must be finite and non-negative");
  }
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) ||
      !(adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
    throw InvalidArgument("Adam betas must lie in [0, 1)");
  }
  if (!(adam_eps > 0.0)) throw InvalidArgument("Adam epsilon must be positive");
}

double DefaultLearningRate(ActivationKind kind) {
  return kind == ActivationKind::kSine ? 1e-4 : 5e-3;
}

LossAndGradients ComputeLossAndGradients(const Network& net,
                                         const Eigen::MatrixXd& inputs,
                                         const Eigen::MatrixXd& targets,
                                         ComputePrecision precision) {
  CheckShapes(net, inputs, targets);
  LossAndGradients out;
  if (precision == ComputePrecision::kFloat32) {
    out.loss = Backprop<float>(inputs, targets).Run(net, &out.grad);
  } else {
    out.loss = Backprop<double>(inputs, targets).Run(net, &out.grad);
  }
  return out;
}

TrainResult Train(Network net, const Eigen::MatrixXd& coords,
                  const Eigen::MatrixXd& targets, const TrainConfig& cfg) {
  cfg.Validate();
  const Eigen::MatrixXd inputs = EncodeInputs(net.arch, coords);
  CheckShapes(net, inputs, targets);
  if (cfg.precision == ComputePrecision::kFloat32) {
    const FlushSubnormals ftz;
    return TrainWith<float>(std::move(net), inputs, targets, cfg);
  }
  return TrainWith<double>(std::move(net), inputs, targets, cfg);
}

}  // namespace sinr
