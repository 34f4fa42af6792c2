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
#include "sinr/entropy.h"

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

std::vector<uint8_t> RandomBytes(size_t n, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<uint8_t> out(n);
  for (auto& b : out) b = static_cast<uint8_t>(rng.Next());
  return out;
}

TEST(EntropyTest, RoundTrip) {
  for (size_t n : {size_t{0}, size_t{1}, size_t{1000}, size_t{70000}}) {
    const auto p = RandomBytes(n, n);
    EXPECT_EQ(EntropyUnwrap(EntropyWrap(p)), p);
  }
  std::vector<uint8_t> text(5000);
  for (size_t i = 0; i < text.size(); ++i) text[i] = "abcab"[i % 5];
  EXPECT_EQ(EntropyUnwrap(EntropyWrap(text)), text);
}

TEST(EntropyTest, ZerosCompressWell) {
  const std::vector<uint8_t> zeros(1 << 20, 0);
  const auto wrapped = EntropyWrap(zeros);
  EXPECT_LT(wrapped.size(), 1024u);
  EXPECT_EQ(EntropyUnwrap(wrapped), zeros);
}

TEST(EntropyTest, RandomBytesDoNotCompress) {
  const auto p = RandomBytes(64 * 1024, 9);
  EXPECT_GE(EntropyWrap(p).size(), static_cast<size_t>(0.99 * p.size()));
}

TEST(EntropyTest, Deterministic) {
  const auto p = RandomBytes(3000, 1);
  EXPECT_EQ(EntropyWrap(p), EntropyWrap(p));
}

TEST(EntropyTest, MalformedStreamsThrow) {
  const auto wrapped = EntropyWrap(RandomBytes(5000, 2));
  std::vector<uint8_t> truncated(wrapped.begin(), wrapped.end() - 10);
  EXPECT_THROW(EntropyUnwrap(truncated), FormatError);
  std::vector<uint8_t> trailing = wrapped;
  trailing.push_back(0);
  EXPECT_THROW(EntropyUnwrap(trailing), FormatError);
  EXPECT_THROW(EntropyUnwrap(std::vector<uint8_t>{}), FormatError);
  EXPECT_THROW(EntropyUnwrap(RandomBytes(100, 3)), FormatError);
}

TEST(EntropyTest, OutputLimit) {
  const std::vector<uint8_t> zeros(100000, 0);
  EXPECT_THROW(EntropyUnwrap(EntropyWrap(zeros), 1000), FormatError);
}

}  // namespace
}  // namespace sinr
