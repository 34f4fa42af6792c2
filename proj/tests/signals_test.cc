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

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "sinr/errors.h"
#include "sinr/io.h"

namespace sinr {
namespace {

std::vector<uint8_t> Bytes(const std::string& s) {
  return std::vector<uint8_t>(s.begin(), s.end());
}

TEST(ImageFormatTest, ParsesGrayscale) {
  std::string pgm = "P5\n2 2\n255\n";
  pgm += std::string{'\x00', '\xff', '\x80', '\x40'};
  const ImageSignal img = ParseImage(Bytes(pgm));
  EXPECT_EQ(img.width, 2);
  EXPECT_EQ(img.height, 2);
  EXPECT_EQ(img.channels, 1);
  EXPECT_DOUBLE_EQ(img.at(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(img.at(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(img.at(1, 0), 128.0 / 255.0);
  EXPECT_DOUBLE_EQ(img.at(1, 1), 64.0 / 255.0);
  EXPECT_EQ(EncodeImage(img), Bytes(pgm));
}

TEST(ImageFormatTest, ParsesColorWithComments) {
  std::string ppm = "P6 # colour\n# size follows\n1 1\n255\n";
  ppm += std::string{'\x0a', '\x14', '\x1e'};
  const ImageSignal img = ParseImage(Bytes(ppm));
  EXPECT_EQ(img.channels, 3);
  EXPECT_DOUBLE_EQ(img.at(0, 0, 2), 30.0 / 255.0);
  EXPECT_EQ(ParseImage(EncodeImage(img)), img);
}

TEST(ImageFormatTest, RejectsMalformed) {
  EXPECT_THROW(ParseImage(Bytes("P2\n1 1\n255\n0")), FormatError);
  EXPECT_THROW(ParseImage(Bytes("P5\n2 2\n255\n\x01")), FormatError);
  EXPECT_THROW(ParseImage(Bytes("P5\n1 1\n65535\n\x01\x02")), FormatError);
  EXPECT_THROW(ParseImage(Bytes("P5\n0 1\n255\n")), FormatError);
  EXPECT_THROW(ParseImage(Bytes("P5\n1")), FormatError);
  EXPECT_THROW(ParseImage(Bytes("")), FormatError);
  EXPECT_THROW(LoadImage("/nonexistent/x.pgm"), Error);
}

TEST(ImageFormatTest, WritesRoundedBytes) {
  ImageSignal img{2, 1, 1, {0.5, 1.0}};
  const auto bytes = EncodeImage(img);
  ASSERT_EQ(bytes.size(), 11u + 2u);
  EXPECT_EQ(bytes[11], 128);  // 127.5 rounds up
  EXPECT_EQ(bytes[12], 255);
  img.pixels[0] = 1.5;
  EXPECT_THROW(img.Validate(), InvalidArgument);
}

TEST(ImageFormatTest, FileRoundTrip) {
  const auto path =
      (std::filesystem::temp_directory_path() / "sinr_signals_test.ppm").string();
  const ImageSignal img = ProceduralImage(ProceduralKind::kNoise, 9, 7, 3);
  ImageSignal color{9, 7, 3, {}};
  for (double p : img.pixels) {
    color.pixels.insert(color.pixels.end(), {p, 1.0 - p, 0.5});
  }
  SaveImage(color, path);
  const ImageSignal back = LoadImage(path);
  ASSERT_EQ(back.pixels.size(), color.pixels.size());
  for (size_t i = 0; i < back.pixels.size(); ++i) {
    EXPECT_NEAR(back.pixels[i], color.pixels[i], 0.5 / 255.0 + 1e-12);
  }
  std::filesystem::remove(path);
}

TEST(VoxelFormatTest, RoundTripAndLayout) {
  OccupancyGrid g{2, 2, 2, {1, 0, 0, 0, 0, 0, 0, 1}};
  const auto bytes = EncodeVoxels(g);
  ASSERT_EQ(bytes.size(), 24u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "SVOX");
  EXPECT_EQ(bytes[4], 2);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[16], 1);
  EXPECT_EQ(bytes[23], 1);
  EXPECT_EQ(ParseVoxels(bytes), g);
  EXPECT_EQ(g.occupied(), 2);
}

TEST(VoxelFormatTest, RejectsMalformed) {
  OccupancyGrid g{2, 2, 2, std::vector<uint8_t>(8, 0)};
  auto bytes = EncodeVoxels(g);
  auto bad = bytes;
  bad[20] = 2;
  EXPECT_THROW(ParseVoxels(bad), FormatError);
  bad = bytes;
  bad.pop_back();
  EXPECT_THROW(ParseVoxels(bad), FormatError);
  bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(ParseVoxels(bad), FormatError);
  bad = bytes;
  bad[4] = 0;
  EXPECT_THROW(ParseVoxels(bad), FormatError);
}

TEST(MetricsTest, PsnrOfKnownError) {
  // Every pixel off by 0.1: MSE 0.01, PSNR 20 dB.
  ImageSignal a{4, 4, 1, std::vector<double>(16, 0.5)};
  ImageSignal b{4, 4, 1, std::vector<double>(16, 0.6)};
  EXPECT_NEAR(Mse(a, b), 0.01, 1e-15);
  EXPECT_NEAR(Psnr(a, b), 20.0, 1e-9);
  EXPECT_DOUBLE_EQ(Psnr(a, b), Psnr(b, a));
  EXPECT_TRUE(std::isinf(Psnr(a, a)));
  EXPECT_EQ(DisplayPsnr(Psnr(a, a)), kPsnrDisplayCap);
  EXPECT_EQ(DisplayPsnr(31.5), 31.5);
  ImageSignal c{2, 8, 1, std::vector<double>(16, 0.5)};
  EXPECT_THROW(Psnr(a, c), InvalidArgument);
}

TEST(MetricsTest, PsnrMatchesDirectFormula) {
  const ImageSignal a = ProceduralImage(ProceduralKind::kScene, 32, 24, 1);
  const ImageSignal b = ProceduralImage(ProceduralKind::kScene, 32, 24, 2);
  double sum = 0.0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    sum += (a.pixels[i] - b.pixels[i]) * (a.pixels[i] - b.pixels[i]);
  }
  const double mse = sum / a.pixels.size();
  EXPECT_NEAR(Psnr(a, b), -10.0 * std::log10(mse), 1e-9);
}

TEST(MetricsTest, IouCases) {
  OccupancyGrid a{2, 2, 1, {1, 1, 0, 0}};
  OccupancyGrid b{2, 2, 1, {1, 0, 0, 0}};
  OccupancyGrid c{2, 2, 1, {0, 0, 1, 1}};
  OccupancyGrid empty{2, 2, 1, {0, 0, 0, 0}};
  EXPECT_DOUBLE_EQ(Iou(a, b), 0.5);
  EXPECT_DOUBLE_EQ(Iou(a, c), 0.0);
  EXPECT_DOUBLE_EQ(Iou(a, a), 1.0);
  EXPECT_DOUBLE_EQ(Iou(empty, empty), 1.0);
  EXPECT_DOUBLE_EQ(Iou(a, b), Iou(b, a));
}

TEST(MetricsTest, BitsPerPixel) {
  EXPECT_DOUBLE_EQ(Bpp(49152, 768, 512), 1.0);
  EXPECT_DOUBLE_EQ(Bpp(8192, 256, 256), 1.0);
  EXPECT_THROW(Bpp(1, 0, 5), InvalidArgument);
}

TEST(MetricsTest, CsvHasHeaderAndRows) {
  EXPECT_EQ(MetricsCsv({{"psnr_db", 30.5}, {"bpp", 2.0}}),
            "metric,value\npsnr_db,30.5\nbpp,2\n");
}

TEST(CoordinatesTest, ImageGridSpansUnitSquare) {
  const Eigen::MatrixXd c = ImageCoordinates(3, 2);
  ASSERT_EQ(c.rows(), 6);
  ASSERT_EQ(c.cols(), 2);
  EXPECT_DOUBLE_EQ(c.minCoeff(), -1.0);
  EXPECT_DOUBLE_EQ(c.maxCoeff(), 1.0);
  const ImageSignal img{3, 2, 1, {0, 0.1, 0.2, 0.3, 0.4, 0.5}};
  const Eigen::MatrixXd t = ImageTargets(img);
  ASSERT_EQ(t.rows(), 6);
  for (int i = 0; i < 6; ++i) EXPECT_DOUBLE_EQ(t(i, 0), img.pixels[i]);
}

Network ConstantNet(int in, int out, double value) {
  Architecture a;
  a.input_dim = in;
  a.output_dim = out;
  a.hidden_layers = 1;
  a.hidden_width = 8;
  Network net = InitNetwork(a, 1);
  for (auto& w : net.weights) w.setZero();
  for (auto& b : net.biases) b.setZero();
  net.biases.back().setConstant(value);
  return net;
}

TEST(RenderTest, ZeroNetIsBlackAndOutputIsClamped) {
  const ImageSignal black = RenderInrImage(ConstantNet(2, 1, 0.0), 5, 4, 1);
  EXPECT_EQ(black.pixels, std::vector<double>(20, 0.0));
  const ImageSignal white = RenderInrImage(ConstantNet(2, 3, 7.0), 3, 3, 3);
  EXPECT_EQ(white.pixels, std::vector<double>(27, 1.0));
}

TEST(RenderTest, OccupancyThreshold) {
  EXPECT_EQ(RenderInrOccupancy(ConstantNet(3, 1, 1.0), {4, 4, 4}).occupied(), 64);
  EXPECT_EQ(RenderInrOccupancy(ConstantNet(3, 1, 0.0), {4, 4, 4}).occupied(), 0);
  EXPECT_EQ(RenderInrOccupancy(ConstantNet(3, 1, 0.5), {4, 4, 4}).occupied(), 0);
}

TEST(RenderTest, LargeImagesAreChunkedConsistently) {
  Architecture a;
  a.hidden_layers = 1;
  a.hidden_width = 16;
  const Network net = InitNetwork(a, 4);
  const ImageSignal img = RenderInrImage(net, 130, 70, 1);
  const Eigen::MatrixXd out = Forward(net, ImageCoordinates(130, 70));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    EXPECT_NEAR(img.pixels[i], std::clamp(out(i, 0), 0.0, 1.0), 1e-12);
  }
}

TEST(SphereTest, VolumeAndSymmetry) {
  const OccupancyGrid g = SphereGrid(64, 0.5);
  const double fraction = static_cast<double>(g.occupied()) / (64.0 * 64 * 64);
  EXPECT_NEAR(fraction, 4.0 / 3.0 * M_PI * 0.125 / 8.0, 0.01);
  const Eigen::MatrixXd t = VoxelTargets(g);
  const Eigen::MatrixXd c = VoxelCoordinates(64, 64, 64);
  ASSERT_EQ(t.rows(), c.rows());
  for (Eigen::Index i = 0; i < c.rows(); i += 997) {
    EXPECT_EQ(t(i, 0) > 0.5, c.row(i).squaredNorm() <= 0.25) << i;
  }
}

TEST(ProceduralTest, DeterministicAndInRange) {
  for (ProceduralKind kind : {ProceduralKind::kGradient, ProceduralKind::kBumps,
                              ProceduralKind::kNoise, ProceduralKind::kScene}) {
    const ImageSignal a = ProceduralImage(kind, 40, 30, 5);
    EXPECT_NO_THROW(a.Validate());
    EXPECT_EQ(a, ProceduralImage(kind, 40, 30, 5));
    EXPECT_NE(a, ProceduralImage(kind, 40, 30, 6));
    EXPECT_EQ(ParseProceduralKind(ToString(kind)), kind);
  }
  EXPECT_THROW(ParseProceduralKind("plasma"), InvalidArgument);
}

}  // namespace
}  // namespace sinr
