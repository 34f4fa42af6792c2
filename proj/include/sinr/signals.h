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
#ifndef SINR_SIGNALS_H_
#define SINR_SIGNALS_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sinr/network.h"

namespace sinr {

// Row-major, channel-interleaved pixels in [0, 1].
struct ImageSignal {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> pixels;

  // Throws InvalidArgument on bad dimensions, size or out-of-range values.
  void Validate() const;
  double at(int y, int x, int c = 0) const {
    return pixels[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  bool operator==(const ImageSignal&) const = default;
};

// Binary voxels, x slowest and z fastest.
struct OccupancyGrid {
  int nx = 0;
  int ny = 0;
  int nz = 0;
  std::vector<uint8_t> voxels;

  void Validate() const;
  int64_t occupied() const;
  bool operator==(const OccupancyGrid&) const = default;
};

// Binary PGM (P5, gray) and PPM (P6, RGB) with maxval 255. Comments in the
// header are skipped. Byte v maps to v / 255; saving rounds and clamps.
ImageSignal ParseImage(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> EncodeImage(const ImageSignal& img);
ImageSignal LoadImage(const std::string& path);
void SaveImage(const ImageSignal& img, const std::string& path);

// "SVOX" | nx u32 | ny u32 | nz u32 | nx*ny*nz bytes in {0, 1}.
OccupancyGrid ParseVoxels(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> EncodeVoxels(const OccupancyGrid& grid);
OccupancyGrid LoadVoxels(const std::string& path);
void SaveVoxels(const OccupancyGrid& grid, const std::string& path);

// PSNR values at or above this are printed as the cap.
inline constexpr double kPsnrDisplayCap = 200.0;

double Mse(const ImageSignal& ref, const ImageSignal& test);
// 10 log10(1 / MSE); +infinity for identical images.
double Psnr(const ImageSignal& ref, const ImageSignal& test);
double DisplayPsnr(double psnr);
// |a and b| / |a or b|, 1 when both are empty.
double Iou(const OccupancyGrid& a, const OccupancyGrid& b);
// 8 * file_bytes / (width * height).
double Bpp(int64_t file_bytes, int width, int height);

// Coordinates and targets for fitting: CoordinateGrid({height, width}) and an
// (height * width) x channels matrix in the same order.
Eigen::MatrixXd ImageCoordinates(int width, int height);
Eigen::MatrixXd ImageTargets(const ImageSignal& img);
Eigen::MatrixXd VoxelCoordinates(int nx, int ny, int nz);
Eigen::MatrixXd VoxelTargets(const OccupancyGrid& grid);

// Forward pass on the pixel grid, outputs clamped to [0, 1].
ImageSignal RenderInrImage(const Network& net, int width, int height,
                           int channels);
// Forward pass on the voxel grid, occupied where output > threshold.
OccupancyGrid RenderInrOccupancy(const Network& net, std::array<int, 3> dims,
                                 double threshold = 0.5);

enum class ProceduralKind : uint8_t {
  kGradient = 0,  // smooth ramp with mild curvature
  kBumps = 1,     // Gaussian bumps on a dark background
  kNoise = 2,     // band-limited sum of random sinusoids
  kScene = 3,     // the above, soft-edged discs and 1/f texture
};

std::string ToString(ProceduralKind kind);
ProceduralKind ParseProceduralKind(const std::string& name);

// Deterministic grayscale test image in [0, 1].
ImageSignal ProceduralImage(ProceduralKind kind, int width, int height,
                            uint64_t seed);

// Voxels whose centers (on the [-1, 1]^3 grid) lie within `radius`.
OccupancyGrid SphereGrid(int n, double radius);

// "metric,value" CSV with a header row.
std::string MetricsCsv(const std::vector<std::pair<std::string, double>>& rows);

}  // namespace sinr

#endif  // SINR_SIGNALS_H_
