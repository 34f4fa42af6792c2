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
#include "sinr/container.h"

#include <zlib.h>

#include <cstring>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/quantize.h"

namespace sinr {
namespace {

// 1 -> 2 -> 1 net, hidden layers = 1: shapes 2x1, 2x2, 1x2.
Architecture SmallArch() {
  Architecture a;
  a.input_dim = 1;
  a.output_dim = 1;
  a.hidden_layers = 1;
  a.hidden_width = 2;
  return a;
}

CompressedInr RawContainer() {
  CompressedInr c;
  c.arch = SmallArch();
  c.master_seed = 0x0102030405060708ull;
  for (int i = 0; i < 3; ++i) {
    const auto [rows, cols] = c.arch.LayerShape(i);
    LayerRecord rec;
    rec.mode = LayerMode::kRaw;
    rec.k1 = rows;
    rec.k2 = cols;
    for (int r = 0; r < rows; ++r) rec.raw_bias.push_back(0.5 * r - i);
    for (int k = 0; k < rows * cols; ++k) rec.raw_weights.push_back(k + 0.25);
    c.layers.push_back(rec);
  }
  return c;
}

// 128-wide net with sparse first layer, used for sparse-mode checks.
CompressedInr SparseContainer(bool lossless) {
  CompressedInr c;
  c.arch.input_dim = 2;
  c.arch.output_dim = 1;
  c.arch.hidden_layers = 1;
  c.arch.hidden_width = 64;
  c.flags = lossless ? kFlagLossless : 0;
  for (int i = 0; i < 3; ++i) {
    const auto [rows, cols] = c.arch.LayerShape(i);
    LayerRecord rec;
    rec.mode = LayerMode::kPerVector;
    rec.k1 = 64;
    rec.k2 = 1024;
    rec.s = 3;
    const int codes = i == 0 ? 2 : (i == 1 ? 64 : 1);
    std::vector<double> values;
    for (int v = 0; v < codes; ++v) {
      for (int t = 0; t < 3; ++t) {
        rec.indices.push_back(static_cast<uint16_t>(v + 100 * t));
        values.push_back(0.1 * t - v);
      }
    }
    std::vector<double> bias(rows, 0.125);
    if (lossless) {
      rec.lossless_values.assign(values.begin(), values.end());
      rec.lossless_bias.assign(bias.begin(), bias.end());
    } else {
      rec.values = Quantize(values);
      rec.bias = Quantize(bias);
    }
    (void)cols;
    c.layers.push_back(rec);
  }
  return c;
}

uint32_t ReadLe32(const std::vector<uint8_t>& b, size_t at) {
  uint32_t v;
  std::memcpy(&v, &b[at], 4);
  return v;
}

TEST(ContainerTest, HeaderLayout) {
  const auto bytes = Serialize(RawContainer());
  ASSERT_GT(bytes.size(), 60u);
  EXPECT_EQ(std::memcmp(bytes.data(), "SINR", 4), 0);
  EXPECT_EQ(bytes[4], 1);  // version, little endian
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(ReadLe32(bytes, 6), 1u);   // input_dim
  EXPECT_EQ(ReadLe32(bytes, 10), 1u);  // output_dim
  EXPECT_EQ(ReadLe32(bytes, 14), 1u);  // hidden_layers
  EXPECT_EQ(ReadLe32(bytes, 18), 2u);  // hidden_width
  EXPECT_EQ(bytes[22], 0);             // sine
  double omega0;
  std::memcpy(&omega0, &bytes[23], 8);
  EXPECT_EQ(omega0, 30.0);
  EXPECT_EQ(ReadLe32(bytes, 39), 0u);  // positional encoding levels
  EXPECT_EQ(bytes[43], 16);            // bitwidth
  EXPECT_EQ(bytes[44], 0);             // flags
  EXPECT_EQ(bytes[45], 0x08);          // master seed, low byte first
  EXPECT_EQ(bytes[52], 0x01);
  EXPECT_EQ(ReadLe32(bytes, 53), 3u);  // layer count
  EXPECT_EQ(bytes[57], 2);             // first layer mode: raw
}

TEST(ContainerTest, RawSizeAndChecksum) {
  const auto bytes = Serialize(RawContainer());
  // header 57 | per layer 13 + (4 + 8 rows) + (4 + 8 rows cols) | crc 4
  const size_t layers = (13 + 4 + 16 + 4 + 16) + (13 + 4 + 16 + 4 + 32) +
                        (13 + 4 + 8 + 4 + 16);
  EXPECT_EQ(bytes.size(), 57 + layers + 4);
  const uint32_t crc = static_cast<uint32_t>(
      crc32(0L, bytes.data(), static_cast<uInt>(bytes.size() - 4)));
  EXPECT_EQ(ReadLe32(bytes, bytes.size() - 4), crc);
}

TEST(ContainerTest, RoundTrips) {
  for (const CompressedInr& c :
       {RawContainer(), SparseContainer(false), SparseContainer(true)}) {
    const auto bytes = Serialize(c);
    EXPECT_EQ(Deserialize(bytes), c);
    EXPECT_EQ(Serialize(Deserialize(bytes)), bytes);
  }
}

TEST(ContainerTest, EveryTruncationIsRejected) {
  const auto bytes = Serialize(SparseContainer(false));
  for (size_t n = 0; n < bytes.size(); n += 7) {
    std::vector<uint8_t> cut(bytes.begin(), bytes.begin() + n);
    EXPECT_THROW(Deserialize(cut), FormatError) << n;
  }
}

TEST(ContainerTest, EverySingleByteCorruptionIsRejected) {
  const auto bytes = Serialize(SparseContainer(false));
  for (size_t i = 0; i < bytes.size(); ++i) {
    std::vector<uint8_t> bad = bytes;
    bad[i] ^= 0x5A;
    EXPECT_THROW(Deserialize(bad), FormatError) << i;
  }
}

TEST(ContainerTest, SemanticChecksWithValidChecksum) {
  auto reseal = [](std::vector<uint8_t> b) {
    const uint32_t crc = static_cast<uint32_t>(
        crc32(0L, b.data(), static_cast<uInt>(b.size() - 4)));
    std::memcpy(&b[b.size() - 4], &crc, 4);
    return b;
  };
  const auto good = Serialize(SparseContainer(false));
  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(Deserialize(reseal(bad_magic)), FormatError);
  auto bad_version = good;
  bad_version[4] = 9;
  EXPECT_THROW(Deserialize(reseal(bad_version)), FormatError);
  auto bad_mode = good;
  bad_mode[57] = 7;
  EXPECT_THROW(Deserialize(reseal(bad_mode)), FormatError);

  CompressedInr c = SparseContainer(false);
  c.layers[1].indices[1] = c.layers[1].indices[0];  // not increasing
  EXPECT_THROW(Deserialize(Serialize(c)), FormatError);
  c = SparseContainer(false);
  c.layers[1].s = 40;  // 2s >= k1
  EXPECT_THROW(Deserialize(Serialize(c)), FormatError);
  c = SparseContainer(false);
  c.layers[1].indices[0] = 2000;  // >= k2
  EXPECT_THROW(Deserialize(Serialize(c)), FormatError);
  c = SparseContainer(false);
  c.layers[0].k1 = 65;  // does not match the layer shape
  EXPECT_THROW(Deserialize(Serialize(c)), FormatError);
}

TEST(ContainerTest, IdenticalContainersGiveIdenticalBytes) {
  EXPECT_EQ(Serialize(SparseContainer(true)), Serialize(SparseContainer(true)));
}

}  // namespace
}  // namespace sinr
