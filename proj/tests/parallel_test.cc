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
#include "sinr/parallel.h"

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace sinr {
namespace {

TEST(ParallelTest, ThreadCountFromEnvironment) {
  setenv("SINR_THREADS", "3", 1);
  EXPECT_EQ(ThreadCount(), 3);
  setenv("SINR_THREADS", "zero", 1);
  EXPECT_GE(ThreadCount(), 1);
  unsetenv("SINR_THREADS");
  EXPECT_GE(ThreadCount(), 1);
}

TEST(ParallelTest, EveryIndexRunsOnce) {
  for (const char* threads : {"1", "4"}) {
    setenv("SINR_THREADS", threads, 1);
    std::vector<int> hits(1000, 0);
    ParallelFor(1000, [&](int i) { hits[i] += 1; });
    EXPECT_EQ(hits, std::vector<int>(1000, 1));
    ParallelFor(0, [&](int) { FAIL(); });
  }
  unsetenv("SINR_THREADS");
}

TEST(ParallelTest, TaskExceptionIsRethrown) {
  setenv("SINR_THREADS", "4", 1);
  EXPECT_THROW(ParallelFor(100,
                           [](int i) {
                             if (i == 57) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
  unsetenv("SINR_THREADS");
}

}  // namespace
}  // namespace sinr
