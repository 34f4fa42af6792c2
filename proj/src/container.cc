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

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "sinr/errors.h"
#include "sinr/layer_coding.h"

namespace sinr {
namespace {

constexpr uint32_t kMaxDim = 1u << 16;
constexpr uint32_t kMaxHiddenLayers = 1u << 12;
constexpr uint32_t kMaxEncodingLevels = 32;

class Writer {
 public:
  void U8(uint8_t v) { out_.push_back(v); }
  void U16(uint16_t v) { Le(v, 2); }
  void U32(uint32_t v) { Le(v, 4); }
  void U64(uint64_t v) { Le(v, 8); }
  void F32(float v) { U32(std::bit_cast<uint32_t>(v)); }
  void F64(double v) { U64(std::bit_cast<uint64_t>(v)); }
  void Bytes(std::span<const uint8_t> b) {
    out_.insert(out_.end(), b.begin(), b.end());
  }
  std::vector<uint8_t>& out() { return out_; }

 private:
  void Le(uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  std::vector<uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> in) : in_(in) {}

  uint8_t U8() { return static_cast<uint8_t>(Le(1)); }
  uint16_t U16() { return static_cast<uint16_t>(Le(2)); }
  uint32_t U32() { return static_cast<uint32_t>(Le(4)); }
  uint64_t U64() { return Le(8); }
  float F32() { return std::bit_cast<float>(U32()); }
  double F64() { return std::bit_cast<double>(U64()); }
  // Reads an element count and checks the payload can actually hold it.
  uint32_t Count(size_t elem_size) {
    const uint32_t n = U32();
    if (static_cast<uint64_t>(n) * elem_size > remaining()) {
      throw FormatError("truncated container: block of " + std::to_string(n) +
                        " elements overruns the stream");
    }
    return n;
  }
  size_t remaining() const { return in_.size() - pos_; }

 private:
  uint64_t Le(int n) {
    if (remaining() < static_cast<size_t>(n)) {
      throw FormatError("truncated container");
    }
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<uint64_t>(in_[pos_ + i]) << (8 * i);
    pos_ += n;
    return v;
  }
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

void WriteQuantized(Writer& w, const QuantizedBlock& b) {
  w.F32(b.vmin);
  w.F32(b.vmax);
  w.U32(static_cast<uint32_t>(b.codes.size()));
  for (uint16_t c : b.codes) w.U16(c);
}

QuantizedBlock ReadQuantized(Reader& r, int bitwidth, uint32_t expected,
                             const std::string& what) {
  QuantizedBlock b;
  b.bitwidth = bitwidth;
  b.vmin = r.F32();
  b.vmax = r.F32();
  const uint32_t n = r.Count(2);
  if (n != expected) {
    throw FormatError(what + ": expected " + std::to_string(expected) +
                      " values, found " + std::to_string(n));
  }
  if (!std::isfinite(b.vmin) || !std::isfinite(b.vmax) || b.vmin > b.vmax) {
    throw FormatError(what + ": invalid quantization range");
  }
  b.codes.resize(n);
  for (auto& c : b.codes) {
    c = r.U16();
    if (c > b.levels() || (b.vmin == b.vmax && c != 0)) {
      throw FormatError(what + ": quantization code out of range");
    }
  }
  return b;
}

void WriteF32(Writer& w, const std::vector<float>& v) {
  w.U32(static_cast<uint32_t>(v.size()));
  for (float x : v) w.F32(x);
}

std::vector<float> ReadF32(Reader& r, uint32_t expected,
                           const std::string& what) {
  const uint32_t n = r.Count(4);
  if (n != expected) throw FormatError(what + ": unexpected value count");
  std::vector<float> v(n);
  for (auto& x : v) {
    x = r.F32();
    if (!std::isfinite(x)) throw FormatError(what + ": non-finite value");
  }
  return v;
}

void WriteF64(Writer& w, const std::vector<double>& v) {
  w.U32(static_cast<uint32_t>(v.size()));
  for (double x : v) w.F64(x);
}

std::vector<double> ReadF64(Reader& r, uint32_t expected,
                            const std::string& what) {
  const uint32_t n = r.Count(8);
  if (n != expected) throw FormatError(what + ": unexpected value count");
  std::vector<double> v(n);
  for (auto& x : v) {
    x = r.F64();
    if (!std::isfinite(x)) throw FormatError(what + ": non-finite value");
  }
  return v;
}

bool IsSparse(LayerMode m) {
  return m == LayerMode::kPerVector || m == LayerMode::kFlattened;
}

Architecture ReadArchitecture(Reader& r) {
  Architecture a;
  const uint32_t in = r.U32(), out = r.U32(), hidden = r.U32(),
                 width = r.U32();
  const uint8_t act = r.U8();
  a.activation.omega0 = r.F64();
  a.activation.sigma = r.F64();
  const uint32_t levels = r.U32();
  if (in < 1 || in > kMaxDim || out < 1 || out > kMaxDim || width < 1 ||
      width > kMaxDim || hidden > kMaxHiddenLayers ||
      levels > kMaxEncodingLevels) {
    throw FormatError("architecture fields out of range");
  }
  if (act > static_cast<uint8_t>(ActivationKind::kRelu)) {
    throw FormatError("unknown activation id " + std::to_string(act));
  }
  a.input_dim = static_cast<int>(in);
  a.output_dim = static_cast<int>(out);
  a.hidden_layers = static_cast<int>(hidden);
  a.hidden_width = static_cast<int>(width);
  a.activation.kind = static_cast<ActivationKind>(act);
  a.positional_encoding_levels = static_cast<int>(levels);
  try {
    a.Validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid architecture: ") + e.what());
  }
  return a;
}

LayerRecord ReadLayer(Reader& r, const CompressedInr& c, int index) {
  const std::string where = "layer " + std::to_string(index);
  const auto [rows, cols] = c.arch.LayerShape(index);
  LayerRecord rec;
  const uint8_t mode = r.U8();
  if (mode > static_cast<uint8_t>(LayerMode::kDense)) {
    throw FormatError(where + ": unknown mode " + std::to_string(mode));
  }
  rec.mode = static_cast<LayerMode>(mode);
  rec.k1 = r.U32();
  rec.k2 = r.U32();
  rec.s = r.U32();
  const uint32_t urows = static_cast<uint32_t>(rows);
  const uint32_t ucols = static_cast<uint32_t>(cols);

  if (!IsSparse(rec.mode)) {
    if (rec.k1 != urows || rec.k2 != ucols || rec.s != 0) {
      throw FormatError(where + ": dense record does not match the shape");
    }
    if (rec.mode == LayerMode::kRaw) {
      rec.raw_bias = ReadF64(r, urows, where + " bias");
      rec.raw_weights = ReadF64(r, urows * ucols, where + " weights");
    } else {
      rec.bias = ReadQuantized(r, c.bitwidth, urows, where + " bias");
      rec.values =
          ReadQuantized(r, c.bitwidth, urows * ucols, where + " weights");
    }
    return rec;
  }

  const CodingMode coding_mode = rec.mode == LayerMode::kPerVector
                                     ? CodingMode::kPerVector
                                     : CodingMode::kFlattened;
  const uint64_t k1 = static_cast<uint64_t>(VectorLength(coding_mode, rows, cols));
  const uint64_t codes =
      static_cast<uint64_t>(VectorCount(coding_mode, rows, cols));
  if (rec.k1 != k1) {
    throw FormatError(where + ": k1=" + std::to_string(rec.k1) +
                      " does not match the layer shape");
  }
  if (rec.k2 <= rec.k1 || rec.k2 > 65536) {
    throw FormatError(where + ": invalid dictionary width");
  }
  if (rec.s < 1 || 2 * uint64_t{rec.s} >= rec.k1) {
    throw FormatError(where + ": sparsity violates 2s < k1");
  }
  const uint32_t nnz = static_cast<uint32_t>(codes * rec.s);
  if (c.lossless()) {
    rec.lossless_bias = ReadF32(r, urows, where + " bias");
    rec.lossless_values = ReadF32(r, nnz, where + " values");
  } else {
    rec.bias = ReadQuantized(r, c.bitwidth, urows, where + " bias");
    rec.values = ReadQuantized(r, c.bitwidth, nnz, where + " values");
  }
  if (r.remaining() < size_t{nnz} * 2) {
    throw FormatError(where + ": truncated index list");
  }
  rec.indices.resize(nnz);
  for (uint32_t i = 0; i < nnz; ++i) {
    rec.indices[i] = r.U16();
    if (rec.indices[i] >= rec.k2) {
      throw FormatError(where + ": atom index out of range");
    }
    if (i % rec.s != 0 && rec.indices[i] <= rec.indices[i - 1]) {
      throw FormatError(where + ": atom indices not strictly increasing");
    }
  }
  return rec;
}

}  // namespace

std::vector<uint8_t> Serialize(const CompressedInr& c) {
  Writer w;
  w.Bytes(kMagic);
  w.U16(c.version);
  const Architecture& a = c.arch;
  w.U32(static_cast<uint32_t>(a.input_dim));
  w.U32(static_cast<uint32_t>(a.output_dim));
  w.U32(static_cast<uint32_t>(a.hidden_layers));
  w.U32(static_cast<uint32_t>(a.hidden_width));
  w.U8(static_cast<uint8_t>(a.activation.kind));
  w.F64(a.activation.omega0);
  w.F64(a.activation.sigma);
  w.U32(static_cast<uint32_t>(a.positional_encoding_levels));
  w.U8(c.bitwidth);
  w.U8(c.flags);
  w.U64(c.master_seed);
  w.U32(static_cast<uint32_t>(c.layers.size()));
  for (const LayerRecord& rec : c.layers) {
    w.U8(static_cast<uint8_t>(rec.mode));
    w.U32(rec.k1);
    w.U32(rec.k2);
    w.U32(rec.s);
    switch (rec.mode) {
      case LayerMode::kRaw:
        WriteF64(w, rec.raw_bias);
        WriteF64(w, rec.raw_weights);
        break;
      case LayerMode::kDense:
        WriteQuantized(w, rec.bias);
        WriteQuantized(w, rec.values);
        break;
      case LayerMode::kPerVector:
      case LayerMode::kFlattened:
        if (c.lossless()) {
          WriteF32(w, rec.lossless_bias);
          WriteF32(w, rec.lossless_values);
        } else {
          WriteQuantized(w, rec.bias);
          WriteQuantized(w, rec.values);
        }
        for (uint16_t idx : rec.indices) w.U16(idx);
        break;
    }
  }
  std::vector<uint8_t>& out = w.out();
  const uLong crc = crc32(0L, out.data(), static_cast<uInt>(out.size()));
  w.U32(static_cast<uint32_t>(crc));
  return std::move(out);
}

CompressedInr Deserialize(std::span<const uint8_t> bytes) {
  if (bytes.size() < sizeof(kMagic) + 2 + 4 ||
      std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("not a SINR container (bad magic)");
  }
  const std::span<const uint8_t> body = bytes.first(bytes.size() - 4);
  const std::span<const uint8_t> tail = bytes.last(4);
  const uint32_t stored_crc = static_cast<uint32_t>(tail[0]) |
                              static_cast<uint32_t>(tail[1]) << 8 |
                              static_cast<uint32_t>(tail[2]) << 16 |
                              static_cast<uint32_t>(tail[3]) << 24;
  Reader r(body.subspan(sizeof(kMagic)));
  CompressedInr c;
  c.version = r.U16();
  if (c.version != kFormatVersion) {
    throw FormatError("unsupported container version " +
                      std::to_string(c.version));
  }
  if (crc32(0L, body.data(), static_cast<uInt>(body.size())) != stored_crc) {
    throw FormatError("container checksum mismatch");
  }
  c.arch = ReadArchitecture(r);
  c.bitwidth = r.U8();
  if (c.bitwidth < 1 || c.bitwidth > 16) {
    throw FormatError("invalid bitwidth " + std::to_string(c.bitwidth));
  }
  c.flags = r.U8();
  if ((c.flags & ~kFlagLossless) != 0) throw FormatError("unknown flags");
  c.master_seed = r.U64();
  const uint32_t layers = r.U32();
  if (layers != static_cast<uint32_t>(c.arch.layer_count())) {
    throw FormatError("layer count " + std::to_string(layers) +
                      " does not match the architecture");
  }
  c.layers.reserve(layers);
  for (uint32_t i = 0; i < layers; ++i) {
    c.layers.push_back(ReadLayer(r, c, static_cast<int>(i)));
  }
  if (r.remaining() != 0) {
    throw FormatError("unexpected trailing bytes in container");
  }
  return c;
}

}  // namespace sinr
