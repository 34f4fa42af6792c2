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
#ifndef SINR_IO_H_
#define SINR_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sinr {

// Whole-file read. Throws Error with the path on failure.
std::vector<uint8_t> ReadFile(const std::string& path);

// Writes to a temporary file next to `path` and renames it into place, so a
// failed write never leaves a partial file behind.
void WriteFileAtomic(const std::string& path, std::span<const uint8_t> bytes);
void WriteFileAtomic(const std::string& path, const std::string& text);

int64_t FileSize(const std::string& path);

}  // namespace sinr

#endif  // SINR_IO_H_
