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

#ifndef SINR_DICTIONARY_H_
#define SINR_DICTIONARY_H_

#include <cstdint>

#include <Eigen/Dense>

namespace sinr {

// Overcomplete k1 x k2 random Gaussian dictionary with unit-norm atoms
// (columns). The atoms are a pure function of (seed, k1, k2); the decoder
// regenerates them instead of receiving them.
class Dictionary {
 public:
  // Fills the matrix column by column, top to bottom, from consecutive
  // Box-Muller pairs (the unused half of a final odd pair in each column is
  // discarded), then normalizes each column. Throws InvalidArgument unless
  // k2 > k1 >= 1.
  static Dictionary Sample(uint64_t seed, int k1, int k2);

  uint64_t seed() const { return seed_; }
  int k1() const { return static_cast<int>(atoms_.rows()); }
  int k2() const { return static_cast<int>(atoms_.cols()); }
  const Eigen::MatrixXd& atoms() const { return atoms_; }
  auto atom(int j) const { return atoms_.col(j); }

 private:
  Dictionary(uint64_t seed, Eigen::MatrixXd atoms)
      : seed_(seed), atoms_(std::move(atoms)) {}

  uint64_t seed_;
  Eigen::MatrixXd atoms_;
};

}  // namespace sinr

#endif  // SINR_DICTIONARY_H_
