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
#ifndef SINR_CLI_H_
#define SINR_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sinr/codec.h"
#include "sinr/network.h"
#include "sinr/signals.h"
#include "sinr/train.h"

namespace sinr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Everything a command needs. Field names mirror the command-line flags.
struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string reference;
  std::string loss_csv;
  std::string report_csv;

  int hidden_layers = 3;
  int width = 128;
  std::string activation = "sine";
  double omega0 = 30.0;
  double sigma = 10.0;
  int pe_levels = 0;

  int epochs = 2000;
  double lr = 0.0;  // 0 picks the activation default
  int batch_size = 0;
  uint64_t seed = 0;

  std::string s = "auto";  // "auto", one integer, or one per layer "a,b,..."
  double rel_tol = 0.02;
  double input_rel_tol = 0.0;  // 0: codec default
  int k2_factor = 512;
  int bitwidth = 16;
  uint64_t master_seed = 0;
  bool lossless = false;
  double threshold = 0.5;
};

// A training signal: exactly one of the two is set.
struct Signal {
  std::optional<ImageSignal> image;
  std::optional<OccupancyGrid> grid;
};

// A path to a .pgm/.ppm/.svox file, or a generated signal:
//   proc:<gradient|bumps|noise|scene>[:<size>[:<seed>]]   (default 256, 0)
//   sphere:<n>[:<radius>]                                 (default 0.6)
Signal LoadSignal(const std::string& spec);

Architecture ArchitectureFor(const RunConfig& cfg, const Signal& signal);
TrainConfig TrainConfigFor(const RunConfig& cfg, ActivationKind kind);
CompressConfig CompressConfigFor(const RunConfig& cfg);

// PSNR for images (capped for display) or IoU for grids, of the network
// rendered on the signal's grid.
double SignalQuality(const Network& net, const Signal& signal,
                     double threshold);

struct PipelineReport {
  int64_t checkpoint_bytes = 0;
  int64_t baseline_bytes = 0;
  int64_t sinr_bytes = 0;
  bool image = true;
  double quality = 0.0;          // PSNR (dB) or IoU before compression
  double decoded_quality = 0.0;  // same after decompressing the .sinr file
  double bpp = 0.0;              // images only
  CompressReport codec;

  std::vector<std::pair<std::string, double>> Rows() const;
};

// train -> compress -> decompress -> evaluate, writing model.ckpt,
// model.sinr, baseline.bin, loss.csv and report.csv into cfg.output.
PipelineReport RunPipeline(const RunConfig& cfg, std::ostream& log);

// Entry point of the sinr tool. Returns the process exit code.
int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sinr

#endif  // SINR_CLI_H_
