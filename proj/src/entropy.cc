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

#include <brotli/decode.h>
#include <brotli/encode.h>

#include <memory>
#include <string>

#include "sinr/errors.h"

namespace sinr {

std::vector<uint8_t> EntropyWrap(std::span<const uint8_t> payload) {
  size_t size = BrotliEncoderMaxCompressedSize(payload.size());
  if (size == 0) size = payload.size() + 1024;
  std::vector<uint8_t> out(size);
  if (!BrotliEncoderCompress(kBrotliQuality, kBrotliWindowBits,
                             BROTLI_MODE_GENERIC, payload.size(),
                             payload.data(), &size, out.data())) {
    throw Error("Brotli compression failed");
  }
  out.resize(size);
  return out;
}

std::vector<uint8_t> EntropyUnwrap(std::span<const uint8_t> stream,
                                   size_t max_output) {
  std::unique_ptr<BrotliDecoderState, decltype(&BrotliDecoderDestroyInstance)>
      state(BrotliDecoderCreateInstance(nullptr, nullptr, nullptr),
            &BrotliDecoderDestroyInstance);
  if (!state) throw Error("cannot allocate a Brotli decoder");
  std::vector<uint8_t> out;
  size_t avail_in = stream.size();
  const uint8_t* next_in = stream.data();
  uint8_t buffer[1 << 16];
  for (;;) {
    size_t avail_out = sizeof(buffer);
    uint8_t* next_out = buffer;
    const BrotliDecoderResult r = BrotliDecoderDecompressStream(
        state.get(), &avail_in, &next_in, &avail_out, &next_out, nullptr);
    out.insert(out.end(), buffer, next_out);
    if (out.size() > max_output) {
      throw FormatError("Brotli stream expands beyond the size limit");
    }
    if (r == BROTLI_DECODER_RESULT_SUCCESS) break;
    if (r == BROTLI_DECODER_RESULT_NEEDS_MORE_OUTPUT) continue;
    if (r == BROTLI_DECODER_RESULT_NEEDS_MORE_INPUT) {
      throw FormatError("truncated Brotli stream");
    }
    throw FormatError(std::string("malformed Brotli stream: ") +
                      BrotliDecoderErrorString(
                          BrotliDecoderGetErrorCode(state.get())));
  }
  if (avail_in != 0) {
    throw FormatError("trailing bytes after the Brotli stream");
  }
  return out;
}

}  // namespace sinr
