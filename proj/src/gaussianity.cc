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
#include <string>

#include "sinr/errors.h"

namespace sinr {

Moments SampleMoments(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("moments of an empty sample");
  Moments m;
  m.count = static_cast<int64_t>(values.size());
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  m.std = std::sqrt(m2);
  if (!(m2 > 0.0) || m.std <= 1e-300) {
    m.std = 0.0;
    m.degenerate = true;
    return m;
  }
  m.skewness = m3 / (m2 * m.std);
  m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  return m;
}

std::vector<LayerMoments> WeightGaussianity(const Network& net) {
  std::vector<LayerMoments> report;
  for (int layer = 1; layer <= net.arch.hidden_layers; ++layer) {
    const Eigen::MatrixXd& w = net.weights.at(layer);
    if (w.size() < 16) {
      throw InvalidArgument("layer " + std::to_string(layer) + " has only " +
                            std::to_string(w.size()) +
                            " weights; moments need at least 16");
    }
    report.push_back(
        {layer, SampleMoments(std::span<const double>(w.data(), w.size()))});
  }
  return report;
}

}  // namespace sinr
