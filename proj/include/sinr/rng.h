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

#ifndef SINR_RNG_H_
#define SINR_RNG_H_

#include <cstdint>
#include <utility>

namespace sinr {

// SplitMix64 (Steele, Lea & Flood). Every random quantity in the codec and
// the trainer is derived from this generator so that a 64-bit seed fully
// determines it on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextUniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  // Uniform in (lo, hi).
  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUniform();
  }

  // Box-Muller over two consecutive outputs. The first uniform is clamped
  // away from zero so the logarithm stays finite.
  std::pair<double, double> NextGaussianPair();

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace sinr

#endif  // SINR_RNG_H_
