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

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

TEST(DictionaryTest, AtomsHaveUnitNorm) {
  const Dictionary d = Dictionary::Sample(5, 33, 100);
  ASSERT_EQ(d.k1(), 33);
  ASSERT_EQ(d.k2(), 100);
  for (int j = 0; j < d.k2(); ++j) EXPECT_NEAR(d.atom(j).norm(), 1.0, 1e-14);
}

TEST(DictionaryTest, PureFunctionOfSeedAndShape) {
  const Dictionary a = Dictionary::Sample(77, 16, 64);
  const Dictionary b = Dictionary::Sample(77, 16, 64);
  const Dictionary c = Dictionary::Sample(78, 16, 64);
  EXPECT_EQ(a.atoms(), b.atoms());
  EXPECT_NE(a.atoms(), c.atoms());
  EXPECT_EQ(a.seed(), 77u);
}

// Independent rebuild: fill column-major from Box-Muller pairs, dropping the
// unused half of a column's last pair, then normalize.
TEST(DictionaryTest, MatchesColumnMajorBoxMullerFill) {
  constexpr int k1 = 5, k2 = 9;
  SplitMix64 rng(11);
  Eigen::MatrixXd expect(k1, k2);
  for (int j = 0; j < k2; ++j) {
    for (int i = 0; i < k1; i += 2) {
      const auto [g0, g1] = rng.NextGaussianPair();
      expect(i, j) = g0;
      if (i + 1 < k1) expect(i + 1, j) = g1;
    }
    expect.col(j) /= expect.col(j).norm();
  }
  const Dictionary d = Dictionary::Sample(11, k1, k2);
  EXPECT_LT((d.atoms() - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DictionaryTest, EntriesLookGaussianBeforeNormalization) {
  // After normalization sqrt(k1) * entry is close to N(0, 1) for large k1.
  const Dictionary d = Dictionary::Sample(1, 256, 512);
  const Eigen::ArrayXXd x = d.atoms().array() * std::sqrt(256.0);
  const double n = static_cast<double>(x.size());
  EXPECT_NEAR(x.mean(), 0.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(x.square().mean(), 1.0, 1e-12);
  EXPECT_NEAR(x.pow(4).mean(), 3.0, 0.1);
}

TEST(DictionaryTest, RejectsBadShapes) {
  EXPECT_THROW(Dictionary::Sample(0, 0, 4), InvalidArgument);
  EXPECT_THROW(Dictionary::Sample(0, 4, 4), InvalidArgument);
  EXPECT_THROW(Dictionary::Sample(0, 8, 3), InvalidArgument);
}

}  // namespace
}  // namespace sinr
