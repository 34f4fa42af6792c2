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
#ifndef SINR_GAUSSIANITY_H_
#define SINR_GAUSSIANITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sinr/network.h"

namespace sinr {

struct Moments {
  int64_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  // No spread: std is zero and the shape statistics are reported as 0.
  bool degenerate = false;
};

// Population (biased) sample moments. Throws InvalidArgument on an empty span.
Moments SampleMoments(std::span<const double> values);

struct LayerMoments {
  int layer = 0;
  Moments moments;
};

// Moments of every hidden (hidden_width x hidden_width) weight matrix,
// flattened. Throws InvalidArgument if a layer holds fewer than 16 weights.
std::vector<LayerMoments> WeightGaussianity(const Network& net);

}  // namespace sinr

#endif  // SINR_GAUSSIANITY_H_
