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

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

void ApplyActivation(const Activation& act, Eigen::MatrixXd& z) {
  switch (act.kind) {
    case ActivationKind::kSine:
      z = (z.array() * act.omega0).sin().matrix();
      break;
    case ActivationKind::kGaussian:
      z = (-(z.array() * act.sigma).square()).exp().matrix();
      break;
    case ActivationKind::kRelu:
      z = z.cwiseMax(0.0);
      break;
  }
}

}  // namespace

std::string ToString(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::kSine:
      return "sine";
    case ActivationKind::kGaussian:
      return "gaussian";
    case ActivationKind::kRelu:
      return "relu";
  }
  return "unknown";
}

ActivationKind ParseActivation(const std::string& name) {
  if (name == "sine") return ActivationKind::kSine;
  if (name == "gaussian") return ActivationKind::kGaussian;
  if (name == "relu") return ActivationKind::kRelu;
  throw InvalidArgument("unknown activation '" + name +
                        "' (expected sine, gaussian or relu)");
}

int Architecture::encoded_input_dim() const {
  return positional_encoding_levels > 0
             ? 2 * positional_encoding_levels * input_dim
             : input_dim;
}

std::pair<int, int> Architecture::LayerShape(int layer) const {
  const int last = layer_count() - 1;
  if (layer < 0 || layer > last) {
    throw InvalidArgument("layer index " + std::to_string(layer) +
                          " out of range");
  }
  const int rows = layer == last ? output_dim : hidden_width;
  const int cols = layer == 0 ? encoded_input_dim() : hidden_width;
  return {rows, cols};
}

void Architecture::Validate() const {
  if (input_dim < 1 || output_dim < 1 || hidden_width < 1) {
    throw InvalidArgument("architecture dimensions must be positive");
  }
  if (hidden_layers < 0) {
    throw InvalidArgument("hidden layer count must be non-negative");
  }
  if (positional_encoding_levels < 0) {
    throw InvalidArgument("positional encoding levels must be non-negative");
  }
  if (!(activation.omega0 > 0.0) || !(activation.sigma > 0.0) ||
      !std::isfinite(activation.omega0) || !std::isfinite(activation.sigma)) {
    throw InvalidArgument("activation omega0 and sigma must be positive");
  }
}

void Network::Validate() const {
  arch.Validate();
  const int layers = arch.layer_count();
  if (static_cast<int>(weights.size()) != layers ||
      static_cast<int>(biases.size()) != layers) {
    throw InvalidArgument("network has " + std::to_string(weights.size()) +
                          " weight matrices, architecture expects " +
                          std::to_string(layers));
  }
  for (int i = 0; i < layers; ++i) {
    const auto [rows, cols] = arch.LayerShape(i);
    if (weights[i].rows() != rows || weights[i].cols() != cols ||
        biases[i].size() != rows) {
      throw InvalidArgument("layer " + std::to_string(i) +
                            " does not match the architecture shape");
    }
    if (!weights[i].allFinite() || !biases[i].allFinite()) {
      throw NumericError("layer " + std::to_string(i) +
                         " has non-finite parameters");
    }
  }
}

int64_t Network::ParameterCount() const {
  int64_t total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    total += weights[i].size() + biases[i].size();
  }
  return total;
}

Eigen::MatrixXd CoordinateGrid(std::span<const int> dims) {
  if (dims.empty() || dims.size() > 3) {
    throw InvalidArgument("coordinate grid supports 1 to 3 axes");
  }
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 2) {
      throw InvalidArgument("every grid axis needs at least 2 samples, got " +
                            std::to_string(d));
    }
    total *= d;
  }
  const int axes = static_cast<int>(dims.size());
  Eigen::MatrixXd coords(total, axes);
  Eigen::Index stride = 1;
  for (int a = axes - 1; a >= 0; --a) {
    const int n = dims[a];
    for (Eigen::Index row = 0; row < total; ++row) {
      const Eigen::Index idx = (row / stride) % n;
      coords(row, a) = -1.0 + 2.0 * static_cast<double>(idx) / (n - 1);
    }
    stride *= n;
  }
  return coords;
}

Eigen::MatrixXd PositionalEncoding(const Eigen::MatrixXd& coords, int levels) {
  if (levels < 1) {
    throw InvalidArgument("positional encoding needs at least one level");
  }
  const Eigen::Index axes = coords.cols();
  Eigen::MatrixXd out(coords.rows(), 2 * levels * axes);
  for (Eigen::Index a = 0; a < axes; ++a) {
    for (int l = 0; l < levels; ++l) {
      const double freq = std::ldexp(std::numbers::pi, l);
      const Eigen::Index col = a * 2 * levels + 2 * l;
      out.col(col) = (coords.col(a).array() * freq).sin().matrix();
      out.col(col + 1) = (coords.col(a).array() * freq).cos().matrix();
    }
  }
  return out;
}

Eigen::MatrixXd EncodeInputs(const Architecture& arch,
                             const Eigen::MatrixXd& coords) {
  if (coords.cols() != arch.input_dim) {
    throw InvalidArgument("coordinates have " + std::to_string(coords.cols()) +
                          " columns, network expects " +
                          std::to_string(arch.input_dim));
  }
  if (arch.positional_encoding_levels > 0) {
    return PositionalEncoding(coords, arch.positional_encoding_levels);
  }
  return coords;
}

Network InitNetwork(const Architecture& arch, uint64_t seed) {
  arch.Validate();
  Network net;
  net.arch = arch;
  SplitMix64 rng(seed);
  const int layers = arch.layer_count();
  for (int i = 0; i < layers; ++i) {
    const auto [rows, cols] = arch.LayerShape(i);
    const double fan_in = cols;
    double bound = std::sqrt(6.0 / fan_in);
    if (arch.activation.kind == ActivationKind::kSine) {
      bound = i == 0 ? 1.0 / fan_in : bound / arch.activation.omega0;
    }
    Eigen::MatrixXd w(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) w(r, c) = rng.NextUniform(-bound, bound);
    }
    net.weights.push_back(std::move(w));
    net.biases.push_back(Eigen::VectorXd::Zero(rows));
  }
  return net;
}

Eigen::MatrixXd ForwardEncoded(const Network& net,
                               const Eigen::MatrixXd& inputs) {
  const int layers = net.arch.layer_count();
  if (static_cast<int>(net.weights.size()) != layers ||
      inputs.cols() != net.weights.front().cols()) {
    throw InvalidArgument("input width " + std::to_string(inputs.cols()) +
                          " does not match the first layer fan-in");
  }
  Eigen::MatrixXd h = inputs;
  for (int i = 0; i < layers; ++i) {
    Eigen::MatrixXd z = h * net.weights[i].transpose();
    z.rowwise() += net.biases[i].transpose();
    if (i + 1 < layers) ApplyActivation(net.arch.activation, z);
    if (!z.allFinite()) {
      throw NumericError("non-finite activation in layer " + std::to_string(i));
    }
    h = std::move(z);
  }
  return h;
}

Eigen::MatrixXd Forward(const Network& net, const Eigen::MatrixXd& coords) {
  return ForwardEncoded(net, EncodeInputs(net.arch, coords));
}

}  // namespace sinr
