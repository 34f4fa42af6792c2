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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sinr/entropy.h"
#include "sinr/errors.h"
#include "sinr/gaussianity.h"
#include "sinr/io.h"
#include "sinr/layer_coding.h"

namespace sinr {
namespace {

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
T ParseNumber(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !in.eof()) throw InvalidArgument("bad " + what + ": " + text);
  return value;
}

// Re-raises an error with a stage prefix, keeping its type so the exit code
// does not change.
template <typename F>
auto Stage(const std::string& name, F&& fn) {
  try {
    return fn();
  } catch (const BudgetError& e) {
    throw BudgetError(name + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(name + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(name + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError(name + ": " + e.what());
  } catch (const RankDeficientError& e) {
    throw RankDeficientError(name + ": " + e.what());
  } catch (const Error& e) {
    throw Error(name + ": " + e.what());
  }
}

void Require(const std::string& value, const std::string& flag,
             const std::string& command) {
  if (value.empty()) {
    throw InvalidArgument(command + " requires " + flag);
  }
}

// key=value lines; '#' starts a comment. Values only fill options that were
// not given on the command line.
void ApplyConfigFile(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(line_no) +
                            ": expected key=value");
    }
    std::string key = Trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = Trim(line.substr(eq + 1));
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw InvalidArgument(path + ":" + std::to_string(line_no) +
                            ": unknown key '" + key + "' for " +
                            sub->get_name());
    }
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

Network ReadNetwork(const std::string& path) {
  return Stage(path, [&] { return DecompressInr(ReadFile(path)); });
}

void CheckModality(const Network& net, const Signal& signal) {
  if (signal.image) {
    if (net.arch.input_dim != 2 || net.arch.output_dim != signal.image->channels) {
      throw InvalidArgument("modality mismatch: network maps " +
                            std::to_string(net.arch.input_dim) + " -> " +
                            std::to_string(net.arch.output_dim) +
                            " but the reference is an image");
    }
  } else if (net.arch.input_dim != 3 || net.arch.output_dim != 1) {
    throw InvalidArgument("modality mismatch: network maps " +
                          std::to_string(net.arch.input_dim) + " -> " +
                          std::to_string(net.arch.output_dim) +
                          " but the reference is an occupancy grid");
  }
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> TrainingData(const Signal& s) {
  if (s.image) {
    return {ImageCoordinates(s.image->width, s.image->height),
            ImageTargets(*s.image)};
  }
  return {VoxelCoordinates(s.grid->nx, s.grid->ny, s.grid->nz),
          VoxelTargets(*s.grid)};
}

std::string LossCsv(const std::vector<double>& history) {
  std::ostringstream out;
  out << std::setprecision(17) << "epoch,loss\n";
  for (size_t i = 0; i < history.size(); ++i) out << i << ',' << history[i] << '\n';
  return out.str();
}

// Uncompressed size of one sparse layer record at sparsity s: mode and
// sizes, bias block, value block and u16 indices.
int64_t ProjectedLayerBytes(int rows, int vectors, int s) {
  const int64_t nz = int64_t{vectors} * s;
  return 13 + (12 + 2 * int64_t{rows}) + (12 + 2 * nz) + 2 * nz;
}

TrainResult TrainOn(const RunConfig& cfg, const Signal& signal,
                    std::ostream& log) {
  const Architecture arch = ArchitectureFor(cfg, signal);
  TrainConfig tc = TrainConfigFor(cfg, arch.activation.kind);
  const int every = std::max(1, tc.epochs / 10);
  tc.on_epoch = [&log, every, total = tc.epochs](int epoch, double loss) {
    if ((epoch + 1) % every == 0 || epoch + 1 == total) {
      log << "epoch " << epoch + 1 << "/" << total << " loss " << loss << "\n";
    }
  };
  auto [coords, targets] = TrainingData(signal);
  return Train(InitNetwork(arch, cfg.seed), coords, targets, tc);
}

void PrintReport(const CompressReport& r, std::ostream& out) {
  out << "bytes " << r.bytes << "\n"
      << "T_s " << r.t_s << "  T_sinr " << r.t_sinr << "  (s_ref " << r.s_ref
      << ")\n";
  for (const LayerReport& l : r.layers) {
    if (l.dense) {
      out << "layer " << l.layer << " dense " << l.rows << "x" << l.cols
          << " (tolerance " << l.tolerance << " not reachable with 2s < k1)"
          << " decoded_err=" << l.decoded_rel_err << "\n";
      continue;
    }
    out << "layer " << l.layer << " " << ToString(l.mode) << " " << l.rows
        << "x" << l.cols << " k1=" << l.k1 << " k2=" << l.k2 << " s=" << l.s
        << " codes=" << l.codes << " sparse_err=" << l.sparse_rel_err
        << " decoded_err=" << l.decoded_rel_err << (l.met ? "" : " (tol not met)")
        << "\n";
  }
}

std::string LayerCsv(const CompressReport& r) {
  std::ostringstream out;
  out << std::setprecision(17)
      << "layer,mode,rows,cols,k1,k2,s,codes,sparse_rel_err,decoded_rel_err,met\n";
  for (const LayerReport& l : r.layers) {
    out << l.layer << ',' << (l.dense ? "dense" : ToString(l.mode)) << ',' << l.rows << ',' << l.cols
        << ',' << l.k1 << ',' << l.k2 << ',' << l.s << ',' << l.codes << ','
        << l.sparse_rel_err << ',' << l.decoded_rel_err << ',' << (l.met ? 1 : 0)
        << '\n';
  }
  return out.str();
}

void EmitText(const std::string& path, const std::string& text,
              std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteFileAtomic(path, text);
  }
}

void CmdTrain(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "train");
  Require(cfg.output, "--output", "train");
  const Signal signal = Stage("load", [&] { return LoadSignal(cfg.input); });
  TrainResult result = Stage("train", [&] { return TrainOn(cfg, signal, out); });
  WriteFileAtomic(cfg.output, EncodeCheckpoint(result.net));
  if (!cfg.loss_csv.empty()) {
    WriteFileAtomic(cfg.loss_csv, LossCsv(result.loss_history));
  }
  const double q = SignalQuality(result.net, signal, cfg.threshold);
  out << std::setprecision(12) << (signal.image ? "psnr_db " : "iou ") << q
      << "\n";
}

void CmdCompress(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "compress");
  Require(cfg.output, "--output", "compress");
  const Network net = ReadNetwork(cfg.input);
  const CompressResult result =
      Stage("compress", [&] { return CompressInr(net, CompressConfigFor(cfg)); });
  WriteFileAtomic(cfg.output, result.bytes);
  PrintReport(result.report, out);
  if (!cfg.reference.empty()) {
    const Signal ref = LoadSignal(cfg.reference);
    if (ref.image) {
      out << "bpp " << Bpp(FileSize(cfg.output), ref.image->width,
                           ref.image->height)
          << "\n";
    }
  }
  if (!cfg.report_csv.empty()) {
    WriteFileAtomic(cfg.report_csv, LayerCsv(result.report));
  }
}

void CmdDecompress(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "decompress");
  Require(cfg.output, "--output", "decompress");
  const Network net = ReadNetwork(cfg.input);
  WriteFileAtomic(cfg.output, EncodeCheckpoint(net));
  out << "wrote " << cfg.output << "\n";
}

void CmdEval(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "eval");
  Require(cfg.reference, "--reference", "eval");
  const Network net = ReadNetwork(cfg.input);
  const Signal ref = Stage("load", [&] { return LoadSignal(cfg.reference); });
  CheckModality(net, ref);
  const int64_t bytes = FileSize(cfg.input);
  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("file_bytes", static_cast<double>(bytes));
  if (ref.image) {
    const ImageSignal img =
        RenderInrImage(net, ref.image->width, ref.image->height,
                       ref.image->channels);
    rows.emplace_back("mse", Mse(*ref.image, img));
    rows.emplace_back("psnr_db", DisplayPsnr(Psnr(*ref.image, img)));
    rows.emplace_back("bpp", Bpp(bytes, ref.image->width, ref.image->height));
  } else {
    const OccupancyGrid grid = RenderInrOccupancy(
        net, {ref.grid->nx, ref.grid->ny, ref.grid->nz}, cfg.threshold);
    rows.emplace_back("iou", Iou(*ref.grid, grid));
  }
  EmitText(cfg.output, MetricsCsv(rows), out);
}

void CmdSweep(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "sweep");
  const Network net = ReadNetwork(cfg.input);
  LayerCodingOptions opts;
  opts.k2_factor = cfg.k2_factor;
  opts.master_seed = cfg.master_seed;
  std::ostringstream csv;
  csv << std::setprecision(17) << "layer,s,rel_err,projected_bytes,selected\n";
  for (int i = 0; i < net.arch.layer_count(); ++i) {
    const Eigen::MatrixXd& w = net.weights[i];
    const SweepResult sweep = Stage("layer " + std::to_string(i), [&] {
      return SweepS(w, i, cfg.rel_tol, opts, /*full_curve=*/true);
    });
    const CodingMode mode = ChooseMode(static_cast<int>(w.rows()),
                                       static_cast<int>(w.cols()),
                                       opts.width_threshold);
    const int vectors = VectorCount(mode, static_cast<int>(w.rows()),
                                    static_cast<int>(w.cols()));
    for (const SweepPoint& p : sweep.curve) {
      csv << i << ',' << p.s << ',' << p.rel_err << ','
          << ProjectedLayerBytes(static_cast<int>(w.rows()), vectors, p.s)
          << ',' << (p.s == sweep.s_opt ? 1 : 0) << '\n';
    }
    out << "layer " << i << " s=" << sweep.s_opt
        << " rel_err=" << sweep.achieved_rel_err
        << (sweep.met ? "" : " (tol not met)") << "\n";
  }
  EmitText(cfg.output, csv.str(), out);
}

void CmdDiagnose(const RunConfig& cfg, std::ostream& out) {
  Require(cfg.input, "--input", "diagnose");
  const Network net = ReadNetwork(cfg.input);
  std::ostringstream csv;
  csv << std::setprecision(17)
      << "layer,count,mean,std,skewness,excess_kurtosis\n";
  for (const LayerMoments& lm : WeightGaussianity(net)) {
    const Moments& m = lm.moments;
    csv << lm.layer << ',' << m.count << ',' << m.mean << ',' << m.std << ','
        << m.skewness << ',' << m.excess_kurtosis << '\n';
  }
  EmitText(cfg.output, csv.str(), out);
}

void CmdPipeline(const RunConfig& cfg, std::ostream& out) {
  const PipelineReport report = RunPipeline(cfg, out);
  out << std::setprecision(10);
  for (const auto& [name, value] : report.Rows()) {
    out << name << " " << value << "\n";
  }
}

void AddArchOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--hidden-layers", cfg.hidden_layers, "hidden layers (l)");
  sub->add_option("--width", cfg.width, "hidden width (k)");
  sub->add_option("--activation", cfg.activation, "sine | gaussian | relu");
  sub->add_option("--omega0", cfg.omega0, "sine frequency");
  sub->add_option("--sigma", cfg.sigma, "gaussian scale");
  sub->add_option("--pe-levels", cfg.pe_levels, "positional encoding levels");
  sub->add_option("--epochs", cfg.epochs, "training epochs");
  sub->add_option("--lr", cfg.lr, "Adam learning rate (0: default)");
  sub->add_option("--batch-size", cfg.batch_size, "0 for full batch");
  sub->add_option("--seed", cfg.seed, "training seed");
  sub->add_option("--loss-csv", cfg.loss_csv, "per-epoch loss CSV");
}

void AddCodecOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--s", cfg.s, "auto, one sparsity, or one per layer");
  sub->add_option("--rel-tol", cfg.rel_tol, "sweep tolerance");
  sub->add_option("--input-rel-tol", cfg.input_rel_tol,
                  "first-layer sweep tolerance (0: rel-tol / omega0 or sigma)");
  sub->add_option("--k2-factor", cfg.k2_factor, "k2 = factor * k1");
  sub->add_option("--bitwidth", cfg.bitwidth, "quantizer bits");
  sub->add_option("--master-seed", cfg.master_seed, "dictionary seed");
  sub->add_flag("--lossless", cfg.lossless, "store values as float32");
}

}  // namespace

Signal LoadSignal(const std::string& spec) {
  Signal signal;
  const std::vector<std::string> parts = Split(spec, ':');
  if (!parts.empty() && parts[0] == "proc") {
    if (parts.size() < 2 || parts.size() > 4) {
      throw InvalidArgument("expected proc:<kind>[:<size>[:<seed>]]");
    }
    const int size = parts.size() > 2 ? ParseNumber<int>(parts[2], "size") : 256;
    const uint64_t seed =
        parts.size() > 3 ? ParseNumber<uint64_t>(parts[3], "seed") : 0;
    signal.image = ProceduralImage(ParseProceduralKind(parts[1]), size, size, seed);
  } else if (!parts.empty() && parts[0] == "sphere") {
    if (parts.size() < 2 || parts.size() > 3) {
      throw InvalidArgument("expected sphere:<n>[:<radius>]");
    }
    const double radius =
        parts.size() > 2 ? ParseNumber<double>(parts[2], "radius") : 0.6;
    signal.grid = SphereGrid(ParseNumber<int>(parts[1], "grid size"), radius);
  } else {
    if (!std::filesystem::exists(spec)) {
      throw InvalidArgument("input does not exist: " + spec);
    }
    const std::string ext = std::filesystem::path(spec).extension().string();
    if (ext == ".svox") {
      signal.grid = LoadVoxels(spec);
    } else {
      signal.image = LoadImage(spec);
    }
  }
  return signal;
}

Architecture ArchitectureFor(const RunConfig& cfg, const Signal& signal) {
  Architecture arch;
  arch.input_dim = signal.image ? 2 : 3;
  arch.output_dim = signal.image ? signal.image->channels : 1;
  arch.hidden_layers = cfg.hidden_layers;
  arch.hidden_width = cfg.width;
  arch.activation.kind = ParseActivation(cfg.activation);
  arch.activation.omega0 = cfg.omega0;
  arch.activation.sigma = cfg.sigma;
  arch.positional_encoding_levels = cfg.pe_levels;
  arch.Validate();
  return arch;
}

TrainConfig TrainConfigFor(const RunConfig& cfg, ActivationKind kind) {
  TrainConfig tc;
  tc.epochs = cfg.epochs;
  tc.learning_rate = cfg.lr > 0.0 ? cfg.lr : DefaultLearningRate(kind);
  tc.batch_size = cfg.batch_size;
  tc.seed = cfg.seed;
  tc.Validate();
  return tc;
}

CompressConfig CompressConfigFor(const RunConfig& cfg) {
  CompressConfig cc;
  if (cfg.s != "auto") {
    for (const std::string& part : Split(cfg.s, ',')) {
      cc.s_per_layer.push_back(ParseNumber<int>(Trim(part), "--s"));
    }
    if (cc.s_per_layer.empty()) throw InvalidArgument("--s is empty");
  }
  cc.rel_tol = cfg.rel_tol;
  cc.input_rel_tol = cfg.input_rel_tol;
  cc.k2_factor = cfg.k2_factor;
  cc.bitwidth = cfg.bitwidth;
  cc.master_seed = cfg.master_seed;
  cc.lossless = cfg.lossless;
  cc.Validate();
  return cc;
}

double SignalQuality(const Network& net, const Signal& signal,
                     double threshold) {
  CheckModality(net, signal);
  if (signal.image) {
    const ImageSignal& ref = *signal.image;
    return DisplayPsnr(
        Psnr(ref, RenderInrImage(net, ref.width, ref.height, ref.channels)));
  }
  const OccupancyGrid& ref = *signal.grid;
  return Iou(ref, RenderInrOccupancy(net, {ref.nx, ref.ny, ref.nz}, threshold));
}

std::vector<std::pair<std::string, double>> PipelineReport::Rows() const {
  std::vector<std::pair<std::string, double>> rows;
  const std::string q = image ? "psnr_db" : "iou";
  rows.emplace_back("checkpoint_bytes", static_cast<double>(checkpoint_bytes));
  rows.emplace_back("baseline_bytes", static_cast<double>(baseline_bytes));
  rows.emplace_back("sinr_bytes", static_cast<double>(sinr_bytes));
  rows.emplace_back("size_ratio", static_cast<double>(sinr_bytes) /
                                      static_cast<double>(baseline_bytes));
  rows.emplace_back(q, quality);
  rows.emplace_back("decoded_" + q, decoded_quality);
  rows.emplace_back(q + "_drop", quality - decoded_quality);
  if (image) rows.emplace_back("bpp", bpp);
  rows.emplace_back("t_s", static_cast<double>(codec.t_s));
  rows.emplace_back("t_sinr", static_cast<double>(codec.t_sinr));
  rows.emplace_back("s_ref", codec.s_ref);
  rows.emplace_back("worst_rel_err", codec.worst_rel_err);
  for (const LayerReport& l : codec.layers) {
    const std::string p = "layer" + std::to_string(l.layer) + "_";
    rows.emplace_back(p + "dense", l.dense ? 1 : 0);
    rows.emplace_back(p + "flattened",
                      !l.dense && l.mode == CodingMode::kFlattened ? 1 : 0);
    rows.emplace_back(p + "s", l.s);
    rows.emplace_back(p + "rel_err", l.decoded_rel_err);
  }
  return rows;
}

PipelineReport RunPipeline(const RunConfig& cfg, std::ostream& log) {
  Require(cfg.input, "--input", "pipeline");
  Require(cfg.output, "--output", "pipeline");
  const CompressConfig cc = CompressConfigFor(cfg);
  const Signal signal = Stage("load", [&] { return LoadSignal(cfg.input); });
  std::filesystem::create_directories(cfg.output);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(cfg.output) / name).string();
  };

  PipelineReport report;
  report.image = signal.image.has_value();
  const TrainResult trained =
      Stage("train", [&] { return TrainOn(cfg, signal, log); });
  const std::vector<uint8_t> ckpt = EncodeCheckpoint(trained.net);
  WriteFileAtomic(path("model.ckpt"), ckpt);
  WriteFileAtomic(path("loss.csv"), LossCsv(trained.loss_history));
  report.checkpoint_bytes = FileSize(path("model.ckpt"));
  report.quality = SignalQuality(trained.net, signal, cfg.threshold);

  const CompressResult compressed =
      Stage("compress", [&] { return CompressInr(trained.net, cc); });
  WriteFileAtomic(path("model.sinr"), compressed.bytes);
  report.codec = compressed.report;
  report.sinr_bytes = FileSize(path("model.sinr"));
  PrintReport(compressed.report, log);

  WriteFileAtomic(path("baseline.bin"), EncodeBaseline(trained.net, cc.bitwidth));
  report.baseline_bytes = FileSize(path("baseline.bin"));

  const Network decoded = Stage("decompress", [&] {
    return DecompressInr(ReadFile(path("model.sinr")));
  });
  report.decoded_quality = Stage(
      "eval", [&] { return SignalQuality(decoded, signal, cfg.threshold); });
  if (signal.image) {
    report.bpp = Bpp(report.sinr_bytes, signal.image->width, signal.image->height);
    SaveImage(RenderInrImage(decoded, signal.image->width, signal.image->height,
                             signal.image->channels),
              path(signal.image->channels == 1 ? "decoded.pgm" : "decoded.ppm"));
  }
  WriteFileAtomic(path("report.csv"), MetricsCsv(report.Rows()));
  return report;
}

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse-coded implicit neural representation codec", "sinr"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  struct Command {
    const char* name;
    const char* help;
    void (*run)(const RunConfig&, std::ostream&);
    bool arch;
    bool codec;
  };
  const Command commands[] = {
      {"train", "fit an INR to a signal and write a checkpoint", CmdTrain, true,
       false},
      {"compress", "checkpoint -> .sinr", CmdCompress, false, true},
      {"decompress", ".sinr -> checkpoint", CmdDecompress, false, false},
      {"eval", "PSNR / IoU and bpp of a checkpoint or .sinr file", CmdEval,
       false, false},
      {"sweep", "per-layer sparsity curve", CmdSweep, false, true},
      {"diagnose", "weight moments per hidden layer", CmdDiagnose, false,
       false},
      {"pipeline", "train, compress, decompress and evaluate", CmdPipeline,
       true, true},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input,-i", cfg.input, "input file or signal spec");
    sub->add_option("--output,-o", cfg.output, "output path");
    sub->add_option("--reference", cfg.reference, "reference signal");
    sub->add_option("--report-csv", cfg.report_csv, "per-layer report CSV");
    sub->add_option("--threshold", cfg.threshold, "occupancy threshold");
    sub->add_option("--config", config_path, "key=value defaults file");
    if (c.arch) AddArchOptions(sub, cfg);
    if (c.codec || c.arch) AddCodecOptions(sub, cfg);
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& [sub, command] : subs) {
      if (!sub->parsed()) continue;
      cfg.command = command->name;
      if (!config_path.empty()) ApplyConfigFile(sub, config_path);
      command->run(cfg, out);
    }
  } catch (const InvalidArgument& e) {
    err << "sinr " << cfg.command << ": " << e.what() << "\n"
        << "run 'sinr " << cfg.command << " --help' for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sinr " << cfg.command << ": " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace sinr
