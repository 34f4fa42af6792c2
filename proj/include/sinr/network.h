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

#ifndef SINR_NETWORK_H_
#define SINR_NETWORK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sinr {

enum class ActivationKind : uint8_t {
  kSine = 0,      // sin(omega0 * z)
  kGaussian = 1,  // exp(-(sigma * z)^2)
  kRelu = 2,      // max(0, z)
};

struct Activation {
  ActivationKind kind = ActivationKind::kSine;
  double omega0 = 30.0;
  double sigma = 10.0;

  bool operator==(const Activation&) const = default;
};

std::string ToString(ActivationKind kind);
// Accepts "sine", "gaussian", "relu". Throws InvalidArgument otherwise.
ActivationKind ParseActivation(const std::string& name);

// MLP shape: input_dim -> hidden_width (x hidden_layers + 1) -> output_dim.
// There are hidden_layers + 2 weight matrices in total.
struct Architecture {
  int input_dim = 2;
  int output_dim = 1;
  int hidden_layers = 3;
  int hidden_width = 128;
  Activation activation;
  int positional_encoding_levels = 0;

  int layer_count() const { return hidden_layers + 2; }
  // Width of the first layer's input after positional encoding.
  int encoded_input_dim() const;
  // (rows, cols) = (fan_out, fan_in) of weight matrix `layer`.
  std::pair<int, int> LayerShape(int layer) const;
  // Throws InvalidArgument on non-positive sizes or activation parameters.
  void Validate() const;

  bool operator==(const Architecture&) const = default;
};

// y_{i+1} = act(W_i y_i + b_i) for every layer but the last, which is affine.
struct Network {
  Architecture arch;
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  // Checks that shapes chain and every entry is finite.
  void Validate() const;
  int64_t ParameterCount() const;
};

// Cartesian product of per-axis linspace(-1, 1, n), last axis fastest.
// Returns prod(dims) rows and dims.size() columns.
Eigen::MatrixXd CoordinateGrid(std::span<const int> dims);

// Per axis: [sin(2^0 pi c), cos(2^0 pi c), ..., sin(2^{L-1} pi c),
// cos(2^{L-1} pi c)], axes concatenated. Output width 2 * levels * a.
Eigen::MatrixXd PositionalEncoding(const Eigen::MatrixXd& coords, int levels);

// Applies positional encoding when the architecture asks for it.
Eigen::MatrixXd EncodeInputs(const Architecture& arch,
                             const Eigen::MatrixXd& coords);

// Sine nets use the sinusoidal-INR scheme: U(-1/n, 1/n) in the first layer
// and U(-sqrt(6/n)/omega0, sqrt(6/n)/omega0) after it, n = fan-in. Other
// activations use U(-sqrt(6/n), sqrt(6/n)). Biases start at zero.
Network InitNetwork(const Architecture& arch, uint64_t seed);

// Evaluates the network on raw coordinates (N x input_dim), applying the
// positional encoding if configured. Throws NumericError naming the layer if
// an activation becomes non-finite.
Eigen::MatrixXd Forward(const Network& net, const Eigen::MatrixXd& coords);

// Same as Forward but on inputs that are already encoded.
Eigen::MatrixXd ForwardEncoded(const Network& net,
                               const Eigen::MatrixXd& inputs);

}  // namespace sinr

#endif  // SINR_NETWORK_H_
