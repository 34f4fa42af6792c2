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
#include "sinr/signals.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include "sinr/errors.h"
#include "sinr/io.h"
#include "sinr/parallel.h"
#include "sinr/rng.h"

namespace sinr {
namespace {

constexpr uint8_t kVoxelMagic[4] = {'S', 'V', 'O', 'X'};
constexpr int kRenderChunk = 8192;

// Reads one whitespace-delimited header token, skipping '#' comments.
class HeaderReader {
 public:
  explicit HeaderReader(const std::vector<uint8_t>& bytes) : bytes_(bytes) {}

  std::string Token() {
    for (;;) {
      while (pos_ < bytes_.size() && std::isspace(bytes_[pos_])) ++pos_;
      if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) &&
           bytes_[pos_] != '#') {
      tok.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (tok.empty()) throw FormatError("image header is truncated");
    return tok;
  }

  int Int(const char* what) {
    const std::string tok = Token();
    if (tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(),
                     [](char c) { return std::isdigit(c); })) {
      throw FormatError(std::string("bad image ") + what + ": " + tok);
    }
    return std::stoi(tok);
  }

  // Exactly one whitespace byte separates the header from the raster.
  size_t RasterStart() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("image header is truncated");
    }
    return pos_ + 1;
  }

 private:
  const std::vector<uint8_t>& bytes_;
  size_t pos_ = 0;
};

void PutU32(std::vector<uint8_t>* out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t GetU32(const uint8_t* p) {
  return uint32_t{p[0]} | uint32_t{p[1]} << 8 | uint32_t{p[2]} << 16 |
         uint32_t{p[3]} << 24;
}

void CheckSameShape(const ImageSignal& a, const ImageSignal& b) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels) {
    throw InvalidArgument("image dimensions differ");
  }
}

// Forward pass over coordinate rows in fixed chunks.
Eigen::MatrixXd ChunkedForward(const Network& net,
                               const Eigen::MatrixXd& coords) {
  const int n = static_cast<int>(coords.rows());
  Eigen::MatrixXd out(n, net.arch.output_dim);
  const int chunks = (n + kRenderChunk - 1) / kRenderChunk;
  ParallelFor(chunks, [&](int c) {
    const int first = c * kRenderChunk;
    const int count = std::min(kRenderChunk, n - first);
    out.middleRows(first, count) = Forward(net, coords.middleRows(first, count));
  });
  return out;
}

std::vector<double> GradientField(int width, int height, SplitMix64& rng) {
  const double angle = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
  const double ax = std::cos(angle), ay = std::sin(angle);
  const double bend = rng.NextUniform(0.5, 1.5);
  const double phase = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> v(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const double py = 2.0 * y / std::max(1, height - 1) - 1.0;
    for (int x = 0; x < width; ++x) {
      const double px = 2.0 * x / std::max(1, width - 1) - 1.0;
      const double t = 0.5 * (ax * px + ay * py) / std::numbers::sqrt2;
      v[static_cast<size_t>(y) * width + x] =
          0.5 + 0.6 * t + 0.1 * std::sin(bend * std::numbers::pi * px * py + phase);
    }
  }
  return v;
}

std::vector<double> BumpField(int width, int height, SplitMix64& rng) {
  constexpr int kBumps = 7;
  double cx[kBumps], cy[kBumps], sg[kBumps], amp[kBumps];
  for (int b = 0; b < kBumps; ++b) {
    cx[b] = rng.NextUniform(-0.8, 0.8);
    cy[b] = rng.NextUniform(-0.8, 0.8);
    sg[b] = rng.NextUniform(0.1, 0.35);
    amp[b] = rng.NextUniform(0.4, 1.2);
  }
  std::vector<double> v(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const double py = 2.0 * y / std::max(1, height - 1) - 1.0;
    for (int x = 0; x < width; ++x) {
      const double px = 2.0 * x / std::max(1, width - 1) - 1.0;
      double sum = 0.0;
      for (int b = 0; b < kBumps; ++b) {
        const double d2 = (px - cx[b]) * (px - cx[b]) + (py - cy[b]) * (py - cy[b]);
        sum += amp[b] * std::exp(-d2 / (2.0 * sg[b] * sg[b]));
      }
      v[static_cast<size_t>(y) * width + x] = 0.08 + 0.84 * (1.0 - std::exp(-sum));
    }
  }
  return v;
}

// Sum of random plane waves with |f| in [min_freq, max_freq] cycles across
// the image and 1/(1+|f|) amplitudes, mapped into [0.1, 0.9].
std::vector<double> NoiseField(int width, int height, SplitMix64& rng,
                               double min_freq = 0.0, double max_freq = 6.0,
                               int waves = 16) {
  std::vector<double> fx(waves), fy(waves), ph(waves), amp(waves);
  double total = 0.0;
  for (int k = 0; k < waves; ++k) {
    const double angle = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
    const double f = rng.NextUniform(min_freq, max_freq);
    fx[k] = f * std::cos(angle);
    fy[k] = f * std::sin(angle);
    ph[k] = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
    amp[k] = 1.0 / (1.0 + f);
    total += amp[k];
  }
  std::vector<double> v(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const double py = static_cast<double>(y) / height;
    for (int x = 0; x < width; ++x) {
      const double px = static_cast<double>(x) / width;
      double sum = 0.0;
      for (int k = 0; k < waves; ++k) {
        sum += amp[k] * std::cos(2.0 * std::numbers::pi * (fx[k] * px + fy[k] * py) + ph[k]);
      }
      v[static_cast<size_t>(y) * width + x] = 0.5 + 0.4 * sum / total;
    }
  }
  return v;
}

// Zero-mean texture with a 1/f amplitude spectrum between min_freq and
// max_freq cycles across the image (log-uniform frequencies), scaled to the
// given standard deviation.
std::vector<double> TextureField(int width, int height, SplitMix64& rng,
                                 double min_freq, double max_freq, int waves,
                                 double stddev) {
  std::vector<double> fx(waves), fy(waves), ph(waves), amp(waves);
  double power = 0.0;
  for (int k = 0; k < waves; ++k) {
    const double angle = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
    const double f = min_freq * std::pow(max_freq / min_freq, rng.NextUniform());
    fx[k] = 2.0 * std::numbers::pi * f * std::cos(angle) / width;
    fy[k] = 2.0 * std::numbers::pi * f * std::sin(angle) / height;
    ph[k] = rng.NextUniform(0.0, 2.0 * std::numbers::pi);
    amp[k] = 1.0 / f;
    power += 0.5 * amp[k] * amp[k];
  }
  const double scale = stddev / std::sqrt(power);
  std::vector<double> v(static_cast<size_t>(width) * height, 0.0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double sum = 0.0;
      for (int k = 0; k < waves; ++k) {
        sum += amp[k] * std::cos(fx[k] * x + fy[k] * y + ph[k]);
      }
      v[static_cast<size_t>(y) * width + x] = scale * sum;
    }
  }
  return v;
}

// Soft-edged discs (edge width about two pixels) on a mid-gray background.
std::vector<double> ShapeField(int width, int height, SplitMix64& rng) {
  constexpr int kShapes = 5;
  double cx[kShapes], cy[kShapes], rad[kShapes], level[kShapes];
  for (int k = 0; k < kShapes; ++k) {
    cx[k] = rng.NextUniform(-0.7, 0.7);
    cy[k] = rng.NextUniform(-0.7, 0.7);
    rad[k] = rng.NextUniform(0.1, 0.35);
    level[k] = rng.NextUniform(0.1, 0.9);
  }
  const double edge = 2.0 / std::max(width, height);
  std::vector<double> v(static_cast<size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const double py = 2.0 * y / std::max(1, height - 1) - 1.0;
    for (int x = 0; x < width; ++x) {
      const double px = 2.0 * x / std::max(1, width - 1) - 1.0;
      double value = 0.5;
      for (int k = 0; k < kShapes; ++k) {
        const double d = std::hypot(px - cx[k], py - cy[k]) - rad[k];
        const double inside = 0.5 * (1.0 - std::tanh(d / edge));
        value += inside * (level[k] - value);
      }
      v[static_cast<size_t>(y) * width + x] = value;
    }
  }
  return v;
}

}  // namespace

void ImageSignal::Validate() const {
  if (width < 1 || height < 1) throw InvalidArgument("image must be non-empty");
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("image must have 1 or 3 channels");
  }
  if (pixels.size() != static_cast<size_t>(width) * height * channels) {
    throw InvalidArgument("pixel count does not match the dimensions");
  }
  for (double p : pixels) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("pixel outside [0, 1]");
  }
}

void OccupancyGrid::Validate() const {
  if (nx < 1 || ny < 1 || nz < 1) throw InvalidArgument("grid must be non-empty");
  if (voxels.size() != static_cast<size_t>(nx) * ny * nz) {
    throw InvalidArgument("voxel count does not match the dimensions");
  }
  for (uint8_t v : voxels) {
    if (v > 1) throw InvalidArgument("voxels must be 0 or 1");
  }
}

int64_t OccupancyGrid::occupied() const {
  return std::count(voxels.begin(), voxels.end(), uint8_t{1});
}

ImageSignal ParseImage(const std::vector<uint8_t>& bytes) {
  HeaderReader header(bytes);
  const std::string magic = header.Token();
  ImageSignal img;
  if (magic == "P5") {
    img.channels = 1;
  } else if (magic == "P6") {
    img.channels = 3;
  } else {
    throw FormatError("unsupported image type: " + magic);
  }
  img.width = header.Int("width");
  img.height = header.Int("height");
  const int maxval = header.Int("maxval");
  if (img.width < 1 || img.height < 1) throw FormatError("empty image");
  if (maxval != 255) {
    throw FormatError("unsupported maxval " + std::to_string(maxval));
  }
  const size_t start = header.RasterStart();
  const size_t count = static_cast<size_t>(img.width) * img.height * img.channels;
  if (bytes.size() - start < count) throw FormatError("image raster is truncated");
  img.pixels.resize(count);
  for (size_t i = 0; i < count; ++i) img.pixels[i] = bytes[start + i] / 255.0;
  return img;
}

std::vector<uint8_t> EncodeImage(const ImageSignal& img) {
  img.Validate();
  const std::string header = std::string(img.channels == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.pixels.size());
  for (double p : img.pixels) {
    out.push_back(static_cast<uint8_t>(std::clamp(std::round(p * 255.0), 0.0, 255.0)));
  }
  return out;
}

ImageSignal LoadImage(const std::string& path) {
  try {
    return ParseImage(ReadFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void SaveImage(const ImageSignal& img, const std::string& path) {
  WriteFileAtomic(path, EncodeImage(img));
}

OccupancyGrid ParseVoxels(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kVoxelMagic, 4) != 0) {
    throw FormatError("not an SVOX file");
  }
  OccupancyGrid grid;
  const uint32_t nx = GetU32(&bytes[4]), ny = GetU32(&bytes[8]), nz = GetU32(&bytes[12]);
  if (nx < 1 || ny < 1 || nz < 1 || nx > 4096 || ny > 4096 || nz > 4096) {
    throw FormatError("bad SVOX dimensions");
  }
  grid.nx = static_cast<int>(nx);
  grid.ny = static_cast<int>(ny);
  grid.nz = static_cast<int>(nz);
  const size_t count = static_cast<size_t>(nx) * ny * nz;
  if (bytes.size() - 16 != count) throw FormatError("SVOX payload size mismatch");
  grid.voxels.assign(bytes.begin() + 16, bytes.end());
  for (uint8_t v : grid.voxels) {
    if (v > 1) throw FormatError("SVOX voxel is not binary");
  }
  return grid;
}

std::vector<uint8_t> EncodeVoxels(const OccupancyGrid& grid) {
  grid.Validate();
  std::vector<uint8_t> out(kVoxelMagic, kVoxelMagic + 4);
  PutU32(&out, static_cast<uint32_t>(grid.nx));
  PutU32(&out, static_cast<uint32_t>(grid.ny));
  PutU32(&out, static_cast<uint32_t>(grid.nz));
  out.insert(out.end(), grid.voxels.begin(), grid.voxels.end());
  return out;
}

OccupancyGrid LoadVoxels(const std::string& path) {
  try {
    return ParseVoxels(ReadFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void SaveVoxels(const OccupancyGrid& grid, const std::string& path) {
  WriteFileAtomic(path, EncodeVoxels(grid));
}

double Mse(const ImageSignal& ref, const ImageSignal& test) {
  CheckSameShape(ref, test);
  if (ref.pixels.size() != test.pixels.size() || ref.pixels.empty()) {
    throw InvalidArgument("image pixel buffers differ in size");
  }
  double sum = 0.0;
  for (size_t i = 0; i < ref.pixels.size(); ++i) {
    const double d = ref.pixels[i] - test.pixels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(ref.pixels.size());
}

double Psnr(const ImageSignal& ref, const ImageSignal& test) {
  const double mse = Mse(ref, test);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / mse);
}

double DisplayPsnr(double psnr) { return std::min(psnr, kPsnrDisplayCap); }

double Iou(const OccupancyGrid& a, const OccupancyGrid& b) {
  if (a.nx != b.nx || a.ny != b.ny || a.nz != b.nz ||
      a.voxels.size() != b.voxels.size()) {
    throw InvalidArgument("grid dimensions differ");
  }
  int64_t inter = 0, uni = 0;
  for (size_t i = 0; i < a.voxels.size(); ++i) {
    inter += a.voxels[i] & b.voxels[i];
    uni += a.voxels[i] | b.voxels[i];
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double Bpp(int64_t file_bytes, int width, int height) {
  if (width < 1 || height < 1) throw InvalidArgument("bpp needs positive dims");
  return 8.0 * static_cast<double>(file_bytes) /
         (static_cast<double>(width) * height);
}

Eigen::MatrixXd ImageCoordinates(int width, int height) {
  const int dims[2] = {height, width};
  return CoordinateGrid(dims);
}

Eigen::MatrixXd ImageTargets(const ImageSignal& img) {
  img.Validate();
  Eigen::MatrixXd t(static_cast<Eigen::Index>(img.width) * img.height, img.channels);
  for (Eigen::Index p = 0; p < t.rows(); ++p) {
    for (int c = 0; c < img.channels; ++c) t(p, c) = img.pixels[p * img.channels + c];
  }
  return t;
}

Eigen::MatrixXd VoxelCoordinates(int nx, int ny, int nz) {
  const int dims[3] = {nx, ny, nz};
  return CoordinateGrid(dims);
}

Eigen::MatrixXd VoxelTargets(const OccupancyGrid& grid) {
  grid.Validate();
  Eigen::MatrixXd t(static_cast<Eigen::Index>(grid.voxels.size()), 1);
  for (size_t i = 0; i < grid.voxels.size(); ++i) t(i, 0) = grid.voxels[i];
  return t;
}

ImageSignal RenderInrImage(const Network& net, int width, int height,
                           int channels) {
  if (net.arch.input_dim != 2 || net.arch.output_dim != channels) {
    throw InvalidArgument("network does not map 2 -> " + std::to_string(channels));
  }
  const Eigen::MatrixXd out = ChunkedForward(net, ImageCoordinates(width, height));
  ImageSignal img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.pixels.resize(out.size());
  for (Eigen::Index p = 0; p < out.rows(); ++p) {
    for (int c = 0; c < channels; ++c) {
      img.pixels[p * channels + c] = std::clamp(out(p, c), 0.0, 1.0);
    }
  }
  return img;
}

OccupancyGrid RenderInrOccupancy(const Network& net, std::array<int, 3> dims,
                                 double threshold) {
  if (net.arch.input_dim != 3 || net.arch.output_dim != 1) {
    throw InvalidArgument("network does not map 3 -> 1");
  }
  const Eigen::MatrixXd out =
      ChunkedForward(net, VoxelCoordinates(dims[0], dims[1], dims[2]));
  OccupancyGrid grid;
  grid.nx = dims[0];
  grid.ny = dims[1];
  grid.nz = dims[2];
  grid.voxels.resize(out.rows());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    grid.voxels[i] = out(i, 0) > threshold ? 1 : 0;
  }
  return grid;
}

std::string ToString(ProceduralKind kind) {
  switch (kind) {
    case ProceduralKind::kGradient: return "gradient";
    case ProceduralKind::kBumps: return "bumps";
    case ProceduralKind::kNoise: return "noise";
    case ProceduralKind::kScene: return "scene";
  }
  return "unknown";
}

ProceduralKind ParseProceduralKind(const std::string& name) {
  for (auto kind : {ProceduralKind::kGradient, ProceduralKind::kBumps,
                    ProceduralKind::kNoise, ProceduralKind::kScene}) {
    if (ToString(kind) == name) return kind;
  }
  throw InvalidArgument("unknown procedural image: " + name);
}

ImageSignal ProceduralImage(ProceduralKind kind, int width, int height,
                            uint64_t seed) {
  if (width < 1 || height < 1) throw InvalidArgument("image must be non-empty");
  SplitMix64 rng(seed);
  std::vector<double> v;
  switch (kind) {
    case ProceduralKind::kGradient: v = GradientField(width, height, rng); break;
    case ProceduralKind::kBumps: v = BumpField(width, height, rng); break;
    case ProceduralKind::kNoise: v = NoiseField(width, height, rng); break;
    case ProceduralKind::kScene: {
      const auto g = GradientField(width, height, rng);
      const auto b = BumpField(width, height, rng);
      const auto n = NoiseField(width, height, rng);
      const auto sh = ShapeField(width, height, rng);
      const double top = 0.5 * std::min(width, height);
      const auto t = TextureField(width, height, rng, 4.0, top, 768, 0.15);
      v.resize(g.size());
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] = 0.3 * g[i] + 0.2 * b[i] + 0.2 * n[i] + 0.3 * sh[i] + t[i];
      }
      break;
    }
  }
  ImageSignal img;
  img.width = width;
  img.height = height;
  img.channels = 1;
  img.pixels.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) img.pixels[i] = std::clamp(v[i], 0.0, 1.0);
  return img;
}

OccupancyGrid SphereGrid(int n, double radius) {
  if (n < 2) throw InvalidArgument("sphere grid needs n >= 2");
  OccupancyGrid grid;
  grid.nx = grid.ny = grid.nz = n;
  grid.voxels.resize(static_cast<size_t>(n) * n * n);
  auto c = [n](int i) { return -1.0 + 2.0 * i / (n - 1); };
  size_t idx = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const double r2 = c(x) * c(x) + c(y) * c(y) + c(z) * c(z);
        grid.voxels[idx++] = r2 <= radius * radius ? 1 : 0;
      }
    }
  }
  return grid;
}

std::string MetricsCsv(const std::vector<std::pair<std::string, double>>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "metric,value\n";
  for (const auto& [name, value] : rows) out << name << ',' << value << '\n';
  return out.str();
}

}  // namespace sinr
