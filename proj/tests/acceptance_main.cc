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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.
//
//   acceptance [criterion ...]
//
// Work files go to $SINR_ACCEPTANCE_DIR (default: <tmp>/sinr_acceptance).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <zlib.h>

#include "sinr/cli.h"
#include "sinr/codec.h"
#include "sinr/dictionary.h"
#include "sinr/gaussianity.h"
#include "sinr/io.h"
#include "sinr/layer_coding.h"
#include "sinr/omp.h"
#include "sinr/quantize.h"
#include "sinr/rng.h"
#include "sinr/train.h"

#ifndef SINR_TOOL_PATH
#error "SINR_TOOL_PATH must name the sinr executable"
#endif

namespace sinr {
namespace {

namespace fs = std::filesystem;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path WorkDir() {
  const char* env = std::getenv("SINR_ACCEPTANCE_DIR");
  return env != nullptr && *env != '\0' ? fs::path(env)
                                        : fs::temp_directory_path() / "sinr_acceptance";
}

std::string Fmt(double v, int precision = 4) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

std::string Quote(const std::string& s) { return "'" + s + "'"; }

// Runs the sinr tool in a separate process; output goes to log.
int RunTool(const std::vector<std::string>& args, const fs::path& log) {
  std::string cmd = Quote(SINR_TOOL_PATH);
  for (const std::string& a : args) cmd += " " + Quote(a);
  cmd += " > " + Quote(log.string()) + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

uint32_t Crc32(const std::vector<uint8_t>& bytes) {
  return static_cast<uint32_t>(
      crc32(0L, bytes.data(), static_cast<uInt>(bytes.size())));
}

// ---------------------------------------------------------------------------

Outcome OmpPlantedRecovery() {
  const auto start = Clock::now();
  constexpr int kK1 = 64, kK2 = 128, kS = 8, kTrials = 100;
  int recovered = 0;
  double worst_coef_err = 0.0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const Dictionary dict = Dictionary::Sample(1000 + trial, kK1, kK2);
    SplitMix64 rng(5000 + trial);
    std::vector<int> perm(kK2);
    for (int i = 0; i < kK2; ++i) perm[i] = i;
    for (int i = 0; i < kS; ++i) {
      const int j = i + static_cast<int>(rng.Next() % (kK2 - i));
      std::swap(perm[i], perm[j]);
    }
    std::vector<uint32_t> support(perm.begin(), perm.begin() + kS);
    std::sort(support.begin(), support.end());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(kK2);
    for (uint32_t j : support) x(j) = rng.NextGaussianPair().first;
    const SparseCode code = Omp(dict, dict.atoms() * x, kS);
    if (code.indices() != support) continue;
    Eigen::VectorXd xhat = Eigen::VectorXd::Zero(kK2);
    for (int t = 0; t < code.s(); ++t) xhat(code.indices()[t]) = code.values()[t];
    const double err = (xhat - x).norm() / x.norm();
    worst_coef_err = std::max(worst_coef_err, err);
    if (err < 1e-6) ++recovered;
  }
  const double secs = Seconds(start);
  return {recovered >= 95 && secs < 5.0,
          std::to_string(recovered) + "/100 exact supports with coefficient "
          "error < 1e-6 (worst " + Fmt(worst_coef_err) + "), " + Fmt(secs, 3) +
          " s"};
}

Outcome SeededDecodeIdentity(const fs::path& dir) {
  constexpr int kS = 6;
  constexpr uint64_t kMasterSeed = 42;
  Architecture arch;
  arch.hidden_layers = 2;
  arch.hidden_width = 128;
  Network net = InitNetwork(arch, 1);
  SplitMix64 rng(2024);
  const LayerCodingOptions opts{.master_seed = kMasterSeed};
  for (int l = 0; l < arch.layer_count(); ++l) {
    Eigen::MatrixXd& w = net.weights[l];
    const int rows = static_cast<int>(w.rows());
    const int cols = static_cast<int>(w.cols());
    const CodingMode mode = ChooseMode(rows, cols, opts.width_threshold);
    const int k1 = VectorLength(mode, rows, cols);
    const Dictionary dict = Dictionary::Sample(
        LayerSeed(kMasterSeed, l), k1, DictionaryWidth(k1, opts.k2_factor));
    Eigen::MatrixXd vectors(k1, VectorCount(mode, rows, cols));
    for (Eigen::Index v = 0; v < vectors.cols(); ++v) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(dict.k2());
      for (int t = 0; t < kS; ++t) {
        x(static_cast<Eigen::Index>(rng.Next() % dict.k2())) =
            rng.NextGaussianPair().first;
      }
      vectors.col(v) = dict.atoms() * x;
    }
    w = AssembleLayer(vectors, mode, rows, cols);
    for (Eigen::Index i = 0; i < net.biases[l].size(); ++i) {
      net.biases[l](i) = rng.NextUniform(-1.0, 1.0);
    }
  }
  const fs::path ckpt = dir / "planted.ckpt";
  const fs::path sinr = dir / "planted.sinr";
  const fs::path decoded = dir / "decoded.ckpt";
  WriteFileAtomic(ckpt.string(), EncodeCheckpoint(net));
  fs::remove(sinr);
  fs::remove(decoded);
  if (RunTool({"compress", "-i", ckpt.string(), "-o", sinr.string(), "--lossless",
               "--s", std::to_string(kS), "--master-seed",
               std::to_string(kMasterSeed)},
              dir / "compress.log") != 0) {
    return {false, "compress failed, see " + (dir / "compress.log").string()};
  }
  // Decoding happens in a fresh process that only sees the .sinr bytes.
  if (RunTool({"decompress", "-i", sinr.string(), "-o", decoded.string()},
              dir / "decompress.log") != 0) {
    return {false, "decompress failed, see " + (dir / "decompress.log").string()};
  }
  const Network back = DecompressInr(ReadFile(decoded.string()));
  double worst = 0.0;
  for (int l = 0; l < arch.layer_count(); ++l) {
    worst = std::max(worst, (back.weights[l] - net.weights[l]).norm() /
                                net.weights[l].norm());
  }
  const int64_t bytes = FileSize(sinr.string());
  return {worst <= 1e-6 && back.arch == net.arch,
          "worst relative weight error " + Fmt(worst) + " from a " +
              std::to_string(bytes) + "-byte stream decoded in a new process"};
}

Outcome ParameterCountFormulas() {
  SplitMix64 rng(77);
  int matches = 0;
  std::string last;
  for (int trial = 0; trial < 10; ++trial) {
    Architecture arch;
    arch.input_dim = 1 + static_cast<int>(rng.Next() % 4);
    arch.output_dim = 1 + static_cast<int>(rng.Next() % 4);
    arch.hidden_layers = 1 + static_cast<int>(rng.Next() % 6);
    arch.hidden_width = 50 + static_cast<int>(rng.Next() % 251);
    const int64_t a = arch.input_dim, b = arch.output_dim, l = arch.hidden_layers,
                  k = arch.hidden_width;
    const int s = 1 + static_cast<int>(rng.Next() % ((k - 1) / 2));
    const int64_t t_s = a * k + l * k * k + b * k;
    const int64_t t_sinr = a * 2 * s + k * l * 2 * s + b * 2 * s;
    // Independent check of T_s: count the weights of a real network.
    int64_t weights = 0;
    for (const Eigen::MatrixXd& w : InitNetwork(arch, trial).weights) weights += w.size();
    const ParameterCounts pc = CountParameters(arch, s);
    if (pc.t_s == t_s && pc.t_sinr == t_sinr && weights == t_s) ++matches;
    last = "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
           ", l=" + std::to_string(l) + ", k=" + std::to_string(k) +
           ", s=" + std::to_string(s) + ") -> " + std::to_string(pc.t_s) + "/" +
           std::to_string(pc.t_sinr);
  }
  return {matches == 10,
          std::to_string(matches) + "/10 architectures match exactly, e.g. " + last};
}

Outcome QuantizerBound() {
  const std::pair<double, double> ranges[] = {
      {-1.0, 1.0}, {0.0, 1e-3}, {-1e4, 3e4}, {5.0, 5.5}, {-0.02, 0.02}};
  SplitMix64 rng(31);
  int64_t violations = 0;
  int64_t checked = 0;
  double worst_ratio = 0.0;
  for (const auto& [lo, hi] : ranges) {
    std::vector<double> v(100000);
    for (double& x : v) x = rng.NextUniform(lo, hi);
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    const double bound = (*mx - *mn) / 65535.0;
    const std::vector<double> back = Dequantize(Quantize(v, 16));
    for (size_t i = 0; i < v.size(); ++i) {
      const double err = std::abs(back[i] - v[i]);
      worst_ratio = std::max(worst_ratio, err / bound);
      if (err > bound) ++violations;
      ++checked;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in " +
                               std::to_string(checked) +
                               " values; worst error " + Fmt(worst_ratio) +
                               " x (vmax - vmin) / 65535"};
}

Outcome GradientCheck() {
  Architecture arch;  // 2 -> 8 -> 8 -> 1
  arch.hidden_layers = 1;
  arch.hidden_width = 8;
  Network net = InitNetwork(arch, 3);
  SplitMix64 rng(4);
  for (auto& b : net.biases) {
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = rng.NextUniform(-0.5, 0.5);
  }
  Eigen::MatrixXd x(32, 2), t(32, 1);
  for (int r = 0; r < 32; ++r) {
    x(r, 0) = rng.NextUniform(-1.0, 1.0);
    x(r, 1) = rng.NextUniform(-1.0, 1.0);
    t(r, 0) = rng.NextUniform();
  }
  const auto loss = [&](const Network& n) {
    return (ForwardEncoded(n, x) - t).squaredNorm() / static_cast<double>(t.size());
  };
  const LossAndGradients lg = ComputeLossAndGradients(net, x, t);
  const double h = 1e-6;
  double worst = 0.0;
  int params = 0;
  const auto compare = [&](double analytic, double& slot) {
    const double saved = slot;
    slot = saved + h;
    const double up = loss(net);
    slot = saved - h;
    const double down = loss(net);
    slot = saved;
    const double numeric = (up - down) / (2.0 * h);
    const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
    worst = std::max(worst, std::abs(analytic - numeric) / scale);
    ++params;
  };
  for (int l = 0; l < arch.layer_count(); ++l) {
    for (Eigen::Index i = 0; i < net.weights[l].size(); ++i) {
      compare(lg.grad.weights[l](i), net.weights[l](i));
    }
    for (Eigen::Index i = 0; i < net.biases[l].size(); ++i) {
      compare(lg.grad.biases[l](i), net.biases[l](i));
    }
  }
  return {worst < 1e-3 && params == 105,
          std::to_string(params) + " parameters, worst relative difference " +
              Fmt(worst)};
}

// ---------------------------------------------------------------------------
// Pipelines. The item-6 run is shared with the s-transfer and Gaussianity
// checks.

struct PipelineRun {
  PipelineReport report;
  double seconds = 0.0;
  fs::path dir;
};

PipelineRun Pipeline(RunConfig cfg, const fs::path& dir) {
  cfg.output = dir.string();
  fs::create_directories(dir);
  std::ofstream log(dir / "pipeline.log");
  const auto start = Clock::now();
  PipelineRun run;
  run.report = RunPipeline(cfg, log);
  run.seconds = Seconds(start);
  run.dir = dir;
  return run;
}

// Sine nets on 256x256 images: 600 full-batch Adam epochs at 2e-4.
RunConfig ImageConfig(const std::string& input, int width) {
  RunConfig cfg;
  cfg.input = input;
  cfg.hidden_layers = 3;
  cfg.width = width;
  cfg.epochs = 600;
  cfg.lr = 2e-4;
  cfg.rel_tol = 0.02;
  return cfg;
}

class Runs {
 public:
  explicit Runs(fs::path root) : root_(std::move(root)) {}

  const PipelineRun& ItemSix() {
    if (!item_six_) {
      item_six_ = Pipeline(ImageConfig("proc:scene:256:1", 128), root_ / "c6");
    }
    return *item_six_;
  }

  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
  std::optional<PipelineRun> item_six_;
};

std::string ImageSummary(const PipelineRun& run) {
  const PipelineReport& r = run.report;
  return "PSNR " + Fmt(r.quality) + " dB -> " + Fmt(r.decoded_quality) +
         " dB (drop " + Fmt(r.quality - r.decoded_quality, 3) + "), " +
         std::to_string(r.sinr_bytes) + " B vs baseline " +
         std::to_string(r.baseline_bytes) + " B (" +
         Fmt(100.0 * r.sinr_bytes / r.baseline_bytes, 3) + "%), " +
         Fmt(r.bpp, 3) + " bpp, " + Fmt(run.seconds, 4) + " s";
}

Outcome DeskScalePipeline(Runs& runs) {
  const PipelineRun& run = runs.ItemSix();
  const PipelineReport& r = run.report;
  const bool pass = r.quality >= 30.0 &&
                    r.sinr_bytes <= 0.85 * r.baseline_bytes &&
                    r.quality - r.decoded_quality <= 0.5 && run.seconds < 900.0;
  return {pass, ImageSummary(run)};
}

Outcome TinyInr(Runs& runs) {
  RunConfig cfg = ImageConfig("proc:scene:256:1", 32);
  cfg.hidden_layers = 2;
  cfg.epochs = 1000;
  const PipelineRun run = Pipeline(cfg, runs.root() / "c7");
  const PipelineReport& r = run.report;
  bool flattened = true;
  std::string hidden;
  for (const LayerReport& l : r.codec.layers) {
    if (l.layer < 1 || l.layer > cfg.hidden_layers) continue;
    flattened = flattened && !l.dense && l.mode == CodingMode::kFlattened &&
                l.k1 == 1024 && 2 * l.s < 1024 && l.met;
    hidden += " layer" + std::to_string(l.layer) + ":" +
              (l.dense ? "dense" : ToString(l.mode)) + " k1=" +
              std::to_string(l.k1) + " s=" + std::to_string(l.s);
  }
  const bool pass = flattened && r.quality >= 30.0 &&
                    r.sinr_bytes <= 0.95 * r.baseline_bytes &&
                    r.quality - r.decoded_quality <= 0.5 && run.seconds < 900.0;
  return {pass, ImageSummary(run) + ";" + hidden};
}

Outcome STransfer(Runs& runs) {
  std::vector<std::pair<std::string, int>> s128;
  s128.emplace_back("scene seed 1", runs.ItemSix().report.codec.s_ref);
  const std::pair<const char*, const char*> others[] = {
      {"noise seed 2", "proc:noise:256:2"}, {"scene seed 3", "proc:scene:256:3"}};
  int index = 0;
  for (const auto& [name, input] : others) {
    const PipelineRun run = Pipeline(
        ImageConfig(input, 128), runs.root() / ("c8_" + std::to_string(index++)));
    s128.emplace_back(name, run.report.codec.s_ref);
  }
  const PipelineRun narrow =
      Pipeline(ImageConfig("proc:scene:256:1", 64), runs.root() / "c8_m64");
  const int s64 = narrow.report.codec.s_ref;

  double worst_same_width = 0.0;
  for (size_t i = 0; i < s128.size(); ++i) {
    for (size_t j = i + 1; j < s128.size(); ++j) {
      const double a = s128[i].second, b = s128[j].second;
      worst_same_width = std::max(worst_same_width, std::abs(a - b) / std::max(a, b));
    }
  }
  const double across =
      std::abs(s128[0].second - s64) /
      static_cast<double>(std::max(s128[0].second, s64));
  std::string detail = "m=128:";
  for (const auto& [name, s] : s128) detail += " " + name + ": s=" + std::to_string(s);
  detail += " (max pairwise diff " + Fmt(100 * worst_same_width, 3) +
            "%); m=64 s=" + std::to_string(s64) + " (diff " +
            Fmt(100 * across, 3) + "%)";
  return {worst_same_width <= 0.10 && across > 0.25, detail};
}

Outcome Occupancy(Runs& runs) {
  RunConfig cfg;
  cfg.input = "sphere:64";
  cfg.activation = "gaussian";
  cfg.hidden_layers = 3;
  cfg.width = 128;
  cfg.epochs = 200;
  cfg.lr = 1e-3;
  cfg.batch_size = 4096;
  const PipelineRun run = Pipeline(cfg, runs.root() / "c9");
  const PipelineReport& r = run.report;
  const bool pass = r.quality >= 0.97 && r.quality - r.decoded_quality <= 0.02 &&
                    r.sinr_bytes < r.baseline_bytes;
  return {pass, "IoU " + Fmt(r.quality, 5) + " -> " + Fmt(r.decoded_quality, 5) +
                    ", " + std::to_string(r.sinr_bytes) + " B vs baseline " +
                    std::to_string(r.baseline_bytes) + " B, " +
                    Fmt(run.seconds, 4) + " s"};
}

Outcome Gaussianity(Runs& runs) {
  const Network net =
      DecompressInr(ReadFile((runs.ItemSix().dir / "model.ckpt").string()));
  bool pass = true;
  std::string detail;
  for (const LayerMoments& lm : WeightGaussianity(net)) {
    pass = pass && std::abs(lm.moments.skewness) < 0.5 &&
           std::abs(lm.moments.excess_kurtosis) < 1.0;
    detail += (detail.empty() ? "" : "; ") + std::string("layer ") +
              std::to_string(lm.layer) + " skew " + Fmt(lm.moments.skewness, 3) +
              " kurt " + Fmt(lm.moments.excess_kurtosis, 3);
  }
  return {pass, detail};
}

Outcome Reproducibility(Runs& runs) {
  std::vector<uint32_t> crcs;
  std::vector<std::vector<uint8_t>> files;
  for (const char* name : {"c11_a", "c11_b"}) {
    const fs::path dir = runs.root() / name;
    fs::remove_all(dir);
    const int code = RunTool({"pipeline", "-i", "proc:scene:128:7", "-o",
                              dir.string(), "--epochs", "100", "--seed", "5",
                              "--master-seed", "9"},
                             runs.root() / (std::string(name) + ".log"));
    if (code != 0) return {false, std::string("pipeline ") + name + " failed"};
    files.push_back(ReadFile((dir / "model.sinr").string()));
    crcs.push_back(Crc32(files.back()));
  }
  std::ostringstream detail;
  detail << std::hex << std::setfill('0') << "crc32 " << std::setw(8) << crcs[0]
         << " vs " << std::setw(8) << crcs[1] << std::dec << ", "
         << files[0].size() << " bytes";
  return {files[0] == files[1] && !files[0].empty(), detail.str()};
}

}  // namespace
}  // namespace sinr

int main(int argc, char** argv) {
  using namespace sinr;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const fs::path root = WorkDir();
  fs::create_directories(root);
  Runs runs(root);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "OMP planted recovery", OmpPlantedRecovery},
      {2, "seeded-dictionary decode identity",
       [&] { return SeededDecodeIdentity(root); }},
      {3, "parameter-count formulas", ParameterCountFormulas},
      {4, "quantizer bound", QuantizerBound},
      {5, "gradient check", GradientCheck},
      {6, "desk-scale image pipeline", [&] { return DeskScalePipeline(runs); }},
      {7, "tiny-INR flattened mode", [&] { return TinyInr(runs); }},
      {8, "s transfer across images and widths", [&] { return STransfer(runs); }},
      {9, "occupancy pipeline", [&] { return Occupancy(runs); }},
      {10, "hidden-weight Gaussianity", [&] { return Gaussianity(runs); }},
      {11, "bit-exact reproducibility", [&] { return Reproducibility(runs); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && only.count(c.id) == 0) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id
              << "  " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
