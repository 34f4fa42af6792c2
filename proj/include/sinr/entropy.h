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
#ifndef SINR_ENTROPY_H_
#define SINR_ENTROPY_H_

#include <cstdint>
#include <span>
#include <vector>

namespace sinr {

inline constexpr int kBrotliQuality = 11;
inline constexpr int kBrotliWindowBits = 22;

// Brotli (RFC 7932) stream at quality 11, window 2^22.
std::vector<uint8_t> EntropyWrap(std::span<const uint8_t> payload);

// Inverse of EntropyWrap. Throws FormatError on a malformed or truncated
// stream, on trailing bytes, or if the output would exceed max_output bytes.
std::vector<uint8_t> EntropyUnwrap(std::span<const uint8_t> stream,
                                   size_t max_output = size_t{1} << 31);

}  // namespace sinr

#endif  // SINR_ENTROPY_H_
