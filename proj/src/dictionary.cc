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
#include "sinr/dictionary.h"

#include <cmath>
#include <string>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {

Dictionary Dictionary::Sample(uint64_t seed, int k1, int k2) {
  if (k1 < 1 || k2 <= k1) {
    throw InvalidArgument("dictionary must be overcomplete (k2 > k1 >= 1), got k1=" +
                          std::to_string(k1) + " k2=" + std::to_string(k2));
  }
  Eigen::MatrixXd atoms(k1, k2);
  SplitMix64 rng(seed);
  for (int j = 0; j < k2; ++j) {
    double* col = atoms.col(j).data();
    for (int i = 0; i < k1; i += 2) {
      const auto [g0, g1] = rng.NextGaussianPair();
      col[i] = g0;
      if (i + 1 < k1) col[i + 1] = g1;
    }
    // Plain sequential loops keep the result independent of the SIMD width
    // the library was built for.
    double sum_sq = 0.0;
    for (int i = 0; i < k1; ++i) sum_sq += col[i] * col[i];
    const double norm = std::sqrt(sum_sq);
    for (int i = 0; i < k1; ++i) col[i] /= norm;
  }
  return Dictionary(seed, std::move(atoms));
}

}  // namespace sinr
