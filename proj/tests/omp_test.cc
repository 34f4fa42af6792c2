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
#include "sinr/omp.h"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

struct Planted {
  std::vector<uint32_t> support;  // sorted
  Eigen::VectorXd x;              // dense, length k2
  Eigen::VectorXd w;
};

Planted Plant(const Dictionary& d, int s, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<uint32_t> perm(d.k2());
  std::iota(perm.begin(), perm.end(), 0u);
  for (int i = d.k2() - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.Next() % static_cast<uint64_t>(i + 1)]);
  }
  Planted p;
  p.support.assign(perm.begin(), perm.begin() + s);
  std::sort(p.support.begin(), p.support.end());
  p.x = Eigen::VectorXd::Zero(d.k2());
  for (uint32_t j : p.support) p.x(j) = rng.NextGaussianPair().first;
  p.w = d.atoms() * p.x;
  return p;
}

TEST(SparseCodeTest, ValidatesBudgetOrderAndRange) {
  EXPECT_NO_THROW(SparseCode::Make(8, 16, {1, 5, 9}, {1, 2, 3}));
  EXPECT_THROW(SparseCode::Make(8, 16, {1, 5, 9, 10}, {1, 2, 3, 4}),
               BudgetError);
  EXPECT_THROW(SparseCode::Make(8, 16, {5, 1}, {1, 2}), InvalidArgument);
  EXPECT_THROW(SparseCode::Make(8, 16, {1, 1}, {1, 2}), InvalidArgument);
  EXPECT_THROW(SparseCode::Make(8, 16, {1, 16}, {1, 2}), InvalidArgument);
  EXPECT_THROW(SparseCode::Make(8, 16, {1}, {1, 2}), InvalidArgument);
  EXPECT_THROW(SparseCode::Make(8, 16, {}, {}), InvalidArgument);
  EXPECT_THROW(SparseCode::Make(200000, 70000, {1}, {1}), InvalidArgument);
}

TEST(OmpTest, RecoversPlantedSupports) {
  const Dictionary d = Dictionary::Sample(1, 64, 128);
  int exact = 0;
  for (uint64_t trial = 0; trial < 100; ++trial) {
    const Planted p = Plant(d, 8, 1000 + trial);
    const SparseCode code = Omp(d, p.w, 8);
    if (code.indices() != p.support) continue;
    double err = 0.0;
    for (int t = 0; t < 8; ++t) {
      err += std::pow(code.values()[t] - p.x(code.indices()[t]), 2);
    }
    double norm = 0.0;
    for (uint32_t j : p.support) norm += p.x(j) * p.x(j);
    if (std::sqrt(err / norm) < 1e-6) ++exact;
  }
  EXPECT_GE(exact, 95);
}

TEST(OmpTest, ReconstructIsSumOfScaledAtoms) {
  const Dictionary d = Dictionary::Sample(2, 10, 30);
  const SparseCode code = SparseCode::Make(10, 30, {3, 17}, {0.5, -2.0});
  const Eigen::VectorXd expect = 0.5 * d.atom(3) - 2.0 * d.atom(17);
  EXPECT_LT((Reconstruct(d, code) - expect).norm(), 1e-15);
}

class OmpPathProperties : public ::testing::TestWithParam<uint64_t> {};

TEST_P(OmpPathProperties, ResidualMonotoneAndOrthogonal) {
  const uint64_t seed = GetParam();
  const Dictionary d = Dictionary::Sample(seed, 32, 256);
  SplitMix64 rng(seed + 7);
  Eigen::MatrixXd w(32, 5);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 32; ++i) w(i, j) = rng.NextGaussianPair().first;
  }
  OmpPath path(d, w);
  for (int t = 0; t < 15; ++t) path.Step();
  for (int v = 0; v < 5; ++v) {
    const auto& h = path.residual_history(v);
    ASSERT_EQ(h.size(), 16u);
    EXPECT_DOUBLE_EQ(h[0], w.col(v).norm());
    for (size_t t = 1; t < h.size(); ++t) EXPECT_LE(h[t], h[t - 1] + 1e-12);
    for (int t = 1; t <= 15; ++t) {
      const Eigen::VectorXd r = path.Residual(v, t);
      double worst = 0.0;
      for (int i = 0; i < t; ++i) {
        worst = std::max(worst, std::abs(d.atom(path.selection(v)[i]).dot(r)));
      }
      EXPECT_LT(worst, 1e-8 * w.col(v).norm());
      EXPECT_NEAR(r.norm(), h[t], 1e-9 * w.col(v).norm());
    }
  }
}

TEST_P(OmpPathProperties, PathPrefixEqualsStandaloneOmp) {
  const uint64_t seed = GetParam();
  const Dictionary d = Dictionary::Sample(seed, 24, 200);
  SplitMix64 rng(seed);
  Eigen::MatrixXd w(24, 3);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 24; ++i) w(i, j) = rng.NextUniform(-1.0, 1.0);
  }
  OmpPath path(d, w);
  for (int t = 0; t < 11; ++t) path.Step();
  for (int v = 0; v < 3; ++v) {
    for (int s : {1, 4, 11}) {
      const SparseCode a = path.Code(v, s);
      const SparseCode b = Omp(d, w.col(v), s);
      EXPECT_EQ(a.indices(), b.indices());
      for (int t = 0; t < s; ++t) {
        EXPECT_NEAR(a.values()[t], b.values()[t], 1e-12);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OmpPathProperties,
                         ::testing::Values(1u, 2u, 3u, 42u));

TEST(OmpTest, FirstAtomIsMostCorrelated) {
  const Dictionary d = Dictionary::Sample(8, 16, 64);
  SplitMix64 rng(8);
  Eigen::VectorXd w(16);
  for (int i = 0; i < 16; ++i) w(i) = rng.NextUniform(-1.0, 1.0);
  Eigen::Index best = 0;
  (d.atoms().transpose() * w).cwiseAbs().maxCoeff(&best);
  OmpPath path(d, w);
  path.Step();
  EXPECT_EQ(path.selection(0)[0], best);
}

TEST(OmpTest, TargetEqualToAtomIsFitByThatAtom) {
  const Dictionary base = Dictionary::Sample(4, 4, 9);
  Eigen::VectorXd w = base.atom(2);
  OmpPath path(base, w);
  path.Step();
  EXPECT_EQ(path.selection(0)[0], 2);
  EXPECT_NEAR(path.RelativeError(0, 1), 0.0, 1e-12);
}

TEST(OmpTest, ZeroTargetGivesZeroCode) {
  const Dictionary d = Dictionary::Sample(3, 10, 20);
  OmpPath path(d, Eigen::MatrixXd::Zero(10, 2));
  for (int t = 0; t < 3; ++t) path.Step();
  const SparseCode code = path.Code(1, 3);
  EXPECT_EQ(code.indices(), (std::vector<uint32_t>{0, 1, 2}));
  for (double v : code.values()) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(path.WorstRelativeError(3), 0.0);
}

TEST(OmpTest, BudgetAndInputErrors) {
  const Dictionary d = Dictionary::Sample(3, 10, 20);
  const Eigen::VectorXd w = Eigen::VectorXd::Ones(10);
  EXPECT_THROW(Omp(d, w, 5), BudgetError);
  EXPECT_THROW(Omp(d, w, 0), InvalidArgument);
  EXPECT_THROW(Omp(d, Eigen::VectorXd::Zero(10), 2), InvalidArgument);
  EXPECT_THROW(Omp(d, Eigen::VectorXd::Ones(9), 2), InvalidArgument);
  Eigen::VectorXd bad = w;
  bad(3) = std::nan("");
  EXPECT_THROW(Omp(d, bad, 2), InvalidArgument);
}

TEST(OmpTest, ExactFitStopsAsRankDeficient) {
  // In R^3 any three generic atoms span the space; after an exact fit the
  // next atom is dependent, so the code stops short and is flagged.
  const Dictionary d = Dictionary::Sample(5, 3, 12);
  OmpPath path(d, d.atoms().col(0) + d.atoms().col(1) * 0.5);
  for (int t = 0; t < 5; ++t) path.Step();
  EXPECT_LE(path.atoms(0), 3);
  EXPECT_TRUE(path.rank_deficient(0) || path.atoms(0) < 5);
  EXPECT_NEAR(path.RelativeError(0, 5), 0.0, 1e-9);
}

TEST(OmpTest, ResultsIndependentOfThreadCount) {
  const Dictionary d = Dictionary::Sample(6, 32, 512);
  SplitMix64 rng(6);
  Eigen::MatrixXd w(32, 150);
  for (int j = 0; j < w.cols(); ++j) {
    for (int i = 0; i < 32; ++i) w(i, j) = rng.NextGaussianPair().first;
  }
  auto run = [&](const char* threads) {
    setenv("SINR_THREADS", threads, 1);
    OmpPath path(d, w);
    for (int t = 0; t < 10; ++t) path.Step();
    std::vector<SparseCode> codes;
    for (int v = 0; v < w.cols(); ++v) codes.push_back(path.Code(v, 10));
    return codes;
  };
  const auto one = run("1");
  const auto four = run("4");
  unsetenv("SINR_THREADS");
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace sinr
