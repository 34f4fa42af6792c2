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

#include <algorithm>
#include <string>

#include "sinr/entropy.h"
#include "sinr/errors.h"
#include "sinr/omp.h"

namespace sinr {
namespace {

std::vector<double> RowMajor(const Eigen::MatrixXd& w) {
  std::vector<double> out;
  out.reserve(w.size());
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) out.push_back(w(r, c));
  }
  return out;
}

Eigen::MatrixXd FromRowMajor(const std::vector<double>& v, int rows, int cols) {
  Eigen::MatrixXd w(rows, cols);
  size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) w(r, c) = v[i++];
  }
  return w;
}

std::vector<double> ToVector(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<float> ToFloat(const std::vector<double>& v) {
  return std::vector<float>(v.begin(), v.end());
}

std::vector<double> ToDouble(const std::vector<float>& v) {
  return std::vector<double>(v.begin(), v.end());
}

// Worst per-vector relative error between two matrices, vectors taken the
// same way the coder takes them. Zero reference vectors use absolute error.
double WorstVectorError(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& got,
                        CodingMode mode) {
  const Eigen::MatrixXd a = LayerVectors(ref, mode);
  const Eigen::MatrixXd b = LayerVectors(got, mode);
  double worst = 0.0;
  for (Eigen::Index v = 0; v < a.cols(); ++v) {
    const double norm = a.col(v).norm();
    const double err = (a.col(v) - b.col(v)).norm();
    worst = std::max(worst, norm > 0.0 ? err / norm : err);
  }
  return worst;
}

CodingMode ToCodingMode(LayerMode mode) {
  return mode == LayerMode::kPerVector ? CodingMode::kPerVector
                                       : CodingMode::kFlattened;
}

std::vector<uint8_t> Wrap(const CompressedInr& c) {
  return EntropyWrap(Serialize(c));
}

}  // namespace

void CompressConfig::Validate() const {
  if (s_per_layer.empty() && !(rel_tol > 0.0)) {
    throw InvalidArgument("rel_tol must be positive");
  }
  for (int s : s_per_layer) {
    if (s < 1) throw InvalidArgument("sparsity must be at least 1");
  }
  if (k2_factor < 2) throw InvalidArgument("k2 factor must be at least 2");
  if (bitwidth < 1 || bitwidth > 16) {
    throw InvalidArgument("bitwidth must be in [1, 16]");
  }
  if (width_threshold < 1) {
    throw InvalidArgument("width threshold must be positive");
  }
  if (!(input_rel_tol >= 0.0)) {
    throw InvalidArgument("input_rel_tol must be >= 0");
  }
}

double CompressConfig::LayerTolerance(const Architecture& arch,
                                      int layer) const {
  if (layer != 0) return rel_tol;
  if (input_rel_tol > 0.0) return input_rel_tol;
  switch (arch.activation.kind) {
    case ActivationKind::kSine: return rel_tol / arch.activation.omega0;
    case ActivationKind::kGaussian: return rel_tol / arch.activation.sigma;
    case ActivationKind::kRelu: break;
  }
  return rel_tol;
}

CompressResult CompressInr(const Network& net, const CompressConfig& cfg) {
  cfg.Validate();
  net.Validate();
  const int layers = net.arch.layer_count();
  if (cfg.s_per_layer.size() > 1 &&
      static_cast<int>(cfg.s_per_layer.size()) != layers) {
    throw InvalidArgument("expected one sparsity per layer (" +
                          std::to_string(layers) + "), got " +
                          std::to_string(cfg.s_per_layer.size()));
  }
  LayerCodingOptions opts;
  opts.width_threshold = cfg.width_threshold;
  opts.k2_factor = cfg.k2_factor;
  opts.master_seed = cfg.master_seed;

  CompressResult result;
  CompressedInr& c = result.container;
  c.arch = net.arch;
  c.bitwidth = static_cast<uint8_t>(cfg.bitwidth);
  c.flags = cfg.lossless ? kFlagLossless : 0;
  c.master_seed = cfg.master_seed;
  CompressReport& report = result.report;

  for (int i = 0; i < layers; ++i) {
    const Eigen::MatrixXd& w = net.weights[i];
    const std::vector<double> bias = ToVector(net.biases[i]);
    LayerReport lr;
    lr.layer = i;
    lr.rows = static_cast<int>(w.rows());
    lr.cols = static_cast<int>(w.cols());
    lr.mode = ChooseMode(lr.rows, lr.cols, cfg.width_threshold);
    LayerCoding coding;
    if (cfg.s_per_layer.empty()) {
      lr.tolerance = cfg.LayerTolerance(net.arch, i);
      SweepResult sweep = SweepS(w, i, lr.tolerance, opts);
      lr.met = sweep.met;
      lr.sparse_rel_err = sweep.achieved_rel_err;
      coding = std::move(sweep.coding);
    } else {
      const int s = cfg.s_per_layer.size() == 1 ? cfg.s_per_layer[0]
                                                : cfg.s_per_layer[i];
      coding = EncodeLayer(w, i, s, opts);
      lr.sparse_rel_err = coding.worst_rel_err;
    }

    LayerRecord rec;
    if (!lr.met && cfg.dense_fallback) {
      lr.dense = true;
      rec.k1 = static_cast<uint32_t>(lr.rows);
      rec.k2 = static_cast<uint32_t>(lr.cols);
      if (cfg.lossless) {
        rec.mode = LayerMode::kRaw;
        rec.raw_bias = bias;
        rec.raw_weights = RowMajor(w);
      } else {
        rec.mode = LayerMode::kDense;
        rec.bias = Quantize(bias, cfg.bitwidth);
        rec.values = Quantize(RowMajor(w), cfg.bitwidth);
        lr.value_half_step = rec.values.HalfStep();
      }
      report.stored_scalars += w.size();
    } else {
      lr.k1 = coding.k1;
      lr.k2 = coding.k2;
      lr.s = coding.s;
      lr.codes = static_cast<int>(coding.codes.size());
      rec.mode = coding.mode == CodingMode::kPerVector ? LayerMode::kPerVector
                                                       : LayerMode::kFlattened;
      rec.k1 = static_cast<uint32_t>(coding.k1);
      rec.k2 = static_cast<uint32_t>(coding.k2);
      rec.s = static_cast<uint32_t>(coding.s);
      std::vector<double> values;
      for (const SparseCode& code : coding.codes) {
        values.insert(values.end(), code.values().begin(), code.values().end());
        for (uint32_t idx : code.indices()) {
          rec.indices.push_back(static_cast<uint16_t>(idx));
        }
      }
      if (cfg.lossless) {
        rec.lossless_bias = ToFloat(bias);
        rec.lossless_values = ToFloat(values);
      } else {
        rec.bias = Quantize(bias, cfg.bitwidth);
        rec.values = Quantize(values, cfg.bitwidth);
        lr.value_half_step = rec.values.HalfStep();
      }
      report.stored_scalars += 2 * int64_t{lr.s} * lr.codes;
    }
    c.layers.push_back(std::move(rec));
    report.layers.push_back(lr);
    report.raw_weights += w.size();
  }

  result.bytes = Wrap(c);
  report.bytes = result.bytes.size();

  const Network decoded = ContainerToNetwork(c);
  for (int i = 0; i < layers; ++i) {
    LayerReport& lr = report.layers[i];
    lr.decoded_rel_err =
        WorstVectorError(net.weights[i], decoded.weights[i], lr.mode);
    report.worst_rel_err = std::max(report.worst_rel_err, lr.decoded_rel_err);
  }
  for (const LayerReport& lr : report.layers) {
    if (lr.dense) continue;
    const bool hidden = lr.layer >= 1 && lr.layer <= net.arch.hidden_layers;
    if (hidden || net.arch.hidden_layers == 0) {
      report.s_ref = std::max(report.s_ref, lr.s);
    }
  }
  if (report.s_ref > 0) {
    const ParameterCounts counts = CountParameters(net.arch, report.s_ref);
    report.t_s = counts.t_s;
    report.t_sinr = counts.t_sinr;
  } else {
    report.t_s = report.t_sinr = report.raw_weights;
  }
  return result;
}

Network ContainerToNetwork(const CompressedInr& c) {
  Network net;
  net.arch = c.arch;
  const int layers = c.arch.layer_count();
  if (static_cast<int>(c.layers.size()) != layers) {
    throw FormatError("container layer count does not match its architecture");
  }
  for (int i = 0; i < layers; ++i) {
    const LayerRecord& rec = c.layers[i];
    const auto [rows, cols] = c.arch.LayerShape(i);
    Eigen::MatrixXd w;
    std::vector<double> bias;
    try {
      switch (rec.mode) {
        case LayerMode::kRaw:
          w = FromRowMajor(rec.raw_weights, rows, cols);
          bias = rec.raw_bias;
          break;
        case LayerMode::kDense:
          w = FromRowMajor(Dequantize(rec.values), rows, cols);
          bias = Dequantize(rec.bias);
          break;
        case LayerMode::kPerVector:
        case LayerMode::kFlattened: {
          const std::vector<double> values =
              c.lossless() ? ToDouble(rec.lossless_values)
                           : Dequantize(rec.values);
          bias = c.lossless() ? ToDouble(rec.lossless_bias)
                              : Dequantize(rec.bias);
          LayerCoding coding;
          coding.mode = ToCodingMode(rec.mode);
          coding.rows = rows;
          coding.cols = cols;
          coding.k1 = static_cast<int>(rec.k1);
          coding.k2 = static_cast<int>(rec.k2);
          coding.s = static_cast<int>(rec.s);
          coding.seed = LayerSeed(c.master_seed, i);
          const int count = VectorCount(coding.mode, rows, cols);
          if (values.size() != size_t(count) * rec.s ||
              rec.indices.size() != values.size()) {
            throw FormatError("layer " + std::to_string(i) +
                              ": code payload size mismatch");
          }
          for (int v = 0; v < count; ++v) {
            const size_t off = size_t(v) * rec.s;
            std::vector<uint32_t> idx(rec.indices.begin() + off,
                                      rec.indices.begin() + off + rec.s);
            std::vector<double> val(values.begin() + off,
                                    values.begin() + off + rec.s);
            coding.codes.push_back(SparseCode::Make(
                coding.k1, coding.k2, std::move(idx), std::move(val)));
          }
          w = DecodeLayer(coding);
          break;
        }
      }
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError("layer " + std::to_string(i) + ": " + e.what());
    }
    if (static_cast<int>(bias.size()) != rows) {
      throw FormatError("layer " + std::to_string(i) + ": bias size mismatch");
    }
    net.weights.push_back(std::move(w));
    net.biases.push_back(Eigen::Map<const Eigen::VectorXd>(
        bias.data(), static_cast<Eigen::Index>(bias.size())));
  }
  try {
    net.Validate();
  } catch (const Error& e) {
    throw FormatError(std::string("decoded network is invalid: ") + e.what());
  }
  return net;
}

Network DecompressInr(std::span<const uint8_t> bytes) {
  const std::vector<uint8_t> payload = EntropyUnwrap(bytes);
  return ContainerToNetwork(Deserialize(payload));
}

std::vector<uint8_t> EncodeCheckpoint(const Network& net) {
  net.Validate();
  CompressedInr c;
  c.arch = net.arch;
  for (size_t i = 0; i < net.weights.size(); ++i) {
    LayerRecord rec;
    rec.mode = LayerMode::kRaw;
    rec.k1 = static_cast<uint32_t>(net.weights[i].rows());
    rec.k2 = static_cast<uint32_t>(net.weights[i].cols());
    rec.raw_bias = ToVector(net.biases[i]);
    rec.raw_weights = RowMajor(net.weights[i]);
    c.layers.push_back(std::move(rec));
  }
  return Wrap(c);
}

std::vector<uint8_t> EncodeBaseline(const Network& net, int bitwidth) {
  net.Validate();
  CompressedInr c;
  c.arch = net.arch;
  c.bitwidth = static_cast<uint8_t>(bitwidth);
  for (size_t i = 0; i < net.weights.size(); ++i) {
    LayerRecord rec;
    rec.mode = LayerMode::kDense;
    rec.k1 = static_cast<uint32_t>(net.weights[i].rows());
    rec.k2 = static_cast<uint32_t>(net.weights[i].cols());
    rec.bias = Quantize(ToVector(net.biases[i]), bitwidth);
    rec.values = Quantize(RowMajor(net.weights[i]), bitwidth);
    c.layers.push_back(std::move(rec));
  }
  return Wrap(c);
}

}  // namespace sinr
