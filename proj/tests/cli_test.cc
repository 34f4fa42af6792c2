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
#include "sinr/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sinr/codec.h"
#include "sinr/io.h"

namespace sinr {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sinr");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Value following "<key> " or "<key>," on its own line.
double Metric(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0 && line.size() > key.size() &&
        (line[key.size()] == ' ' || line[key.size()] == ',')) {
      return std::stod(line.substr(key.size() + 1));
    }
  }
  ADD_FAILURE() << "no " << key << " in:\n" << text;
  return 0.0;
}

std::string ReadTextFile(const std::string& path) {
  const std::vector<uint8_t> bytes = ReadFile(path);
  return std::string(bytes.begin(), bytes.end());
}

int CountLines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sinr_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Small sine net on a 24x24 image.
  CliRun TrainSmall(const std::string& ckpt, std::vector<std::string> extra = {}) {
    std::vector<std::string> args = {"train", "-i", "proc:bumps:24:1", "-o", ckpt,
                                     "--hidden-layers", "1", "--width", "64",
                                     "--epochs", "30"};
    args.insert(args.end(), extra.begin(), extra.end());
    return Cli(args);
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"train", "-o", Path("x.ckpt")}).code, kExitUsage);
  EXPECT_EQ(Cli({"train", "-i", "proc:noise:8", "-o", Path("x.ckpt"),
                 "--epochs", "many"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"train", "-i", "proc:plasma:8", "-o", Path("x.ckpt")}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"train", "-i", Path("missing.pgm"), "-o", Path("x.ckpt")}).code,
            kExitUsage);
  const CliRun r = Cli({"compress", "-o", Path("x.sinr")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--input"), std::string::npos);
  EXPECT_FALSE(fs::exists(Path("x.ckpt")));
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, TrainCompressDecompressEval) {
  const CliRun train = TrainSmall(Path("m.ckpt"));
  ASSERT_EQ(train.code, kExitOk) << train.err;
  const double psnr = Metric(train.out, "psnr_db");

  const CliRun eval = Cli({"eval", "-i", Path("m.ckpt"), "--reference", "proc:bumps:24:1"});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  EXPECT_NEAR(Metric(eval.out, "psnr_db"), psnr, 1e-9);

  const CliRun comp = Cli({"compress", "-i", Path("m.ckpt"), "-o", Path("m.sinr"),
                        "--report-csv", Path("layers.csv"), "--k2-factor", "8",
                        "--reference", "proc:bumps:24:1"});
  ASSERT_EQ(comp.code, kExitOk) << comp.err;
  EXPECT_EQ(CountLines(ReadTextFile(Path("layers.csv"))), 1 + 3);
  EXPECT_NEAR(Metric(comp.out, "bpp"), 8.0 * FileSize(Path("m.sinr")) / 576.0, 1e-3);

  const CliRun dec = Cli({"decompress", "-i", Path("m.sinr"), "-o", Path("d.ckpt")});
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  const CliRun eval2 = Cli({"eval", "-i", Path("m.sinr"), "--reference", "proc:bumps:24:1"});
  const CliRun eval3 = Cli({"eval", "-i", Path("d.ckpt"), "--reference", "proc:bumps:24:1"});
  ASSERT_EQ(eval2.code, kExitOk) << eval2.err;
  EXPECT_DOUBLE_EQ(Metric(eval2.out, "psnr_db"), Metric(eval3.out, "psnr_db"));
  EXPECT_LT(Metric(eval2.out, "psnr_db"), psnr + 1e-9);
}

TEST_F(CliTest, TruncatedInputFailsWithoutOutput) {
  ASSERT_EQ(TrainSmall(Path("m.ckpt")).code, kExitOk);
  ASSERT_EQ(Cli({"compress", "-i", Path("m.ckpt"), "-o", Path("m.sinr"),
                 "--k2-factor", "8"}).code,
            kExitOk);
  std::vector<uint8_t> bytes = ReadFile(Path("m.sinr"));
  bytes.resize(bytes.size() / 2);
  WriteFileAtomic(Path("cut.sinr"), bytes);
  const CliRun r = Cli({"decompress", "-i", Path("cut.sinr"), "-o", Path("out.ckpt")});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(fs::exists(Path("out.ckpt")));
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos);
  }
}

TEST_F(CliTest, CommandLineOverridesConfigFile) {
  std::ofstream(Path("run.cfg")) << "# defaults\nepochs = 5\nwidth=64\n"
                                    "hidden-layers = 1\n";
  const std::vector<std::string> base = {"train", "-i", "proc:noise:16:2", "-o",
                                         Path("m.ckpt"), "--config", Path("run.cfg"),
                                         "--loss-csv", Path("loss.csv")};
  ASSERT_EQ(Cli(base).code, kExitOk);
  EXPECT_EQ(CountLines(ReadTextFile(Path("loss.csv"))), 1 + 5);
  EXPECT_EQ(DecompressInr(ReadFile(Path("m.ckpt"))).arch.hidden_width, 64);

  auto args = base;
  args.insert(args.end(), {"--epochs", "3"});
  ASSERT_EQ(Cli(args).code, kExitOk);
  EXPECT_EQ(CountLines(ReadTextFile(Path("loss.csv"))), 1 + 3);

  std::ofstream(Path("bad.cfg")) << "colour = blue\n";
  args = base;
  args[6] = Path("bad.cfg");
  EXPECT_EQ(Cli(args).code, kExitUsage);
}

TEST_F(CliTest, SweepCurveIsMonotone) {
  ASSERT_EQ(TrainSmall(Path("m.ckpt")).code, kExitOk);
  const CliRun r = Cli({"sweep", "-i", Path("m.ckpt"), "-o", Path("sweep.csv"),
                     "--k2-factor", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(ReadTextFile(Path("sweep.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "layer,s,rel_err,projected_bytes,selected");
  int prev_layer = -1, prev_s = 0, selected = 0;
  double prev_err = 0.0, prev_bytes = 0.0;
  while (std::getline(csv, line)) {
    int layer, s, sel;
    double err, bytes;
    char c;
    std::istringstream row(line);
    row >> layer >> c >> s >> c >> err >> c >> bytes >> c >> sel;
    ASSERT_FALSE(row.fail()) << line;
    if (layer == prev_layer) {
      EXPECT_GT(s, prev_s);
      EXPECT_LE(err, prev_err + 1e-12);
      EXPECT_GT(bytes, prev_bytes);
    }
    selected += sel;
    prev_layer = layer;
    prev_s = s;
    prev_err = err;
    prev_bytes = bytes;
  }
  EXPECT_EQ(prev_layer, 2);
  EXPECT_EQ(selected, 3);
}

TEST_F(CliTest, DiagnoseReportsHiddenLayers) {
  ASSERT_EQ(Cli({"train", "-i", "proc:noise:16:2", "-o", Path("m.ckpt"),
                 "--hidden-layers", "2", "--width", "32", "--epochs", "2"}).code,
            kExitOk);
  const CliRun r = Cli({"diagnose", "-i", Path("m.ckpt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(CountLines(r.out), 1 + 2);
  EXPECT_EQ(r.out.rfind("layer,count,mean,std,skewness,excess_kurtosis\n", 0), 0u);
  EXPECT_NE(r.out.find("\n1,1024,"), std::string::npos);
}

TEST_F(CliTest, ModalityMismatchIsUsageError) {
  ASSERT_EQ(TrainSmall(Path("m.ckpt")).code, kExitOk);
  EXPECT_EQ(Cli({"eval", "-i", Path("m.ckpt"), "--reference", "sphere:8"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"eval", "-i", Path("m.ckpt"), "--reference", "proc:bumps:24:1"}).code,
            kExitOk);
}

TEST_F(CliTest, PipelineWritesArtifacts) {
  const CliRun r = Cli({"pipeline", "-i", "sphere:12", "-o", Path("run"),
                     "--activation", "gaussian", "--hidden-layers", "1",
                     "--width", "64", "--epochs", "20", "--k2-factor", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* name : {"model.ckpt", "model.sinr", "baseline.bin",
                           "loss.csv", "report.csv"}) {
    EXPECT_TRUE(fs::exists(Path(std::string("run/") + name))) << name;
  }
  const std::string report = ReadTextFile(Path("run/report.csv"));
  EXPECT_EQ(report.rfind("metric,value\n", 0), 0u);
  EXPECT_DOUBLE_EQ(Metric(report, "sinr_bytes"),
                   static_cast<double>(FileSize(Path("run/model.sinr"))));
  EXPECT_GE(Metric(report, "iou"), 0.0);
}

}  // namespace
}  // namespace sinr
