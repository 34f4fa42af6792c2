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
#ifndef SINR_PARALLEL_H_
#define SINR_PARALLEL_H_

#include <functional>

namespace sinr {

// Worker count: SINR_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int ThreadCount();

// Runs fn(0) ... fn(n - 1) on up to ThreadCount() threads. Tasks must write
// disjoint outputs. The first exception thrown by a task is rethrown.
void ParallelFor(int n, const std::function<void(int)>& fn);

}  // namespace sinr

#endif  // SINR_PARALLEL_H_
