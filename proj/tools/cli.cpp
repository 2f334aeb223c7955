// Copyright 2026 The eegapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "digest.hpp"
#include "eegapprox/bands.hpp"
#include "eegapprox/classifier.hpp"
#include "eegapprox/errors.hpp"
#include "eegapprox/evaluation.hpp"
#include "eegapprox/features.hpp"
#include "eegapprox/pareto.hpp"
#include "eegapprox/power_model.hpp"
#include "eegapprox/signal_io.hpp"
#include "eegapprox/sweep.hpp"
#include "eegapprox/sweep_csv.hpp"

namespace eegapprox::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = EEGAPPROX_VERSION;

struct InputOptions {
  std::string input;
  bool synthetic = false;
  std::uint64_t seed = 1;
  std::size_t synth_epochs = 40;
  std::size_t synth_channels = 2;
  double noise_rms = 1.0;
  double rate_hz = 0.0;
  std::size_t epoch_len = 0;
  std::size_t epoch_stride = 0;
  std::vector<std::string> channels;
  std::string profile = "seizure";
};

struct ApproxOptions {
  int level = 0;
  double overlap = -1.0;
  std::size_t fft_len = 0;
  std::size_t perforation_stride = 0;
};

struct ExtractOptions {
  InputOptions in;
  ApproxOptions approx;
  std::string output;
};

struct SweepCmdOptions {
  InputOptions in;
  std::vector<std::string> clusters{"LITTLE", "big"};
  std::vector<int> cores{1, 2, 3, 4};
  std::vector<int> freqs{600, 1000, 1400};
  std::vector<int> levels{0, 1, 2, 3, 4, 5};
  std::string calibration;
  std::string predictions;
  std::string truth = "baseline";
  double duration_s = 0.5;
  std::size_t repetitions = 3;
  std::uint64_t min_heartbeats = 50;
  double little_multiplier = 0.35;
  std::string output;
  std::string manifest;
};

struct PlotOptions {
  std::string input;
  std::vector<std::string> axes;
  std::string output;
};

struct ParetoOptions {
  std::string input;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LookupError("cannot write " + path);
  fn(out);
  if (!out) throw Error("write to " + path + " failed");
}

std::string fmt_exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string host_name() {
  char buf[256] = {};
  if (gethostname(buf, sizeof buf - 1) != 0) return "unknown";
  return buf;
}

void add_input_flags(CLI::App& cmd, InputOptions& o) {
  auto* input = cmd.add_option("--input", o.input, "CSV recording (one column per channel)")
                    ->check(CLI::ExistingFile);
  auto* synth = cmd.add_flag("--synthetic", o.synthetic,
                             "Generate a labeled two-class synthetic recording");
  input->excludes(synth);
  cmd.add_option("--seed", o.seed, "Seed for --synthetic");
  cmd.add_option("--synth-epochs", o.synth_epochs, "Epoch count for --synthetic")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--synth-channels", o.synth_channels, "Channel count for --synthetic")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--noise", o.noise_rms, "Noise RMS for --synthetic")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--rate", o.rate_hz, "Sample rate in Hz (default 256 with --synthetic)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--epoch-len", o.epoch_len, "Epoch length in samples")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--epoch-stride", o.epoch_stride,
                 "Epoch stride in samples (default: epoch length)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--channels", o.channels, "Channels to keep, in order")->delimiter(',');
  cmd.add_option("--profile", o.profile, "seizure, sleep, stress, or a band-profile file");
}

EpochSpec epoch_of(const InputOptions& o) {
  EpochSpec e{o.epoch_len, o.epoch_stride == 0 ? o.epoch_len : o.epoch_stride};
  e.validate();
  return e;
}

struct LoadedInput {
  EegRecord record;
  json digest;
};

LoadedInput load_input(const InputOptions& o) {
  const auto epoch = epoch_of(o);
  std::optional<EegRecord> rec;
  json digest;
  if (o.synthetic) {
    LabeledSynthSpec spec;
    spec.epochs = o.synth_epochs;
    spec.epoch_length_samples = o.epoch_len;
    spec.sample_rate_hz = o.rate_hz > 0.0 ? o.rate_hz : 256.0;
    spec.channels = o.synth_channels;
    spec.noise_rms = o.noise_rms;
    spec.seed = o.seed;
    rec = synth_labeled(spec);
    const json params = {{"epochs", spec.epochs},
                         {"epoch_length_samples", spec.epoch_length_samples},
                         {"sample_rate_hz", spec.sample_rate_hz},
                         {"channels", spec.channels},
                         {"noise_rms", spec.noise_rms},
                         {"seed", spec.seed}};
    digest = {{"source", "synthetic"},
              {"parameters", params},
              {"sha256", sha256_hex(params.dump())}};
  } else {
    if (o.input.empty()) throw DomainError("one of --input or --synthetic is required");
    if (!(o.rate_hz > 0.0)) throw DomainError("--rate is required with --input");
    rec = load_csv(o.input, o.rate_hz, epoch);
    digest = {{"source", "csv"}, {"path", o.input}, {"sha256", sha256_file(o.input)}};
  }
  if (!o.channels.empty()) rec = select_channels(*rec, o.channels);
  return {std::move(*rec), std::move(digest)};
}

BandProfile profile_of(const std::string& name) {
  if (name == "seizure" || name == "sleep" || name == "stress") {
    return builtin_profile(parse_application(name));
  }
  if (std::filesystem::exists(name)) return load_profile_file(name);
  throw LookupError("unknown profile " + name +
                    " (expected seizure, sleep, stress, or an existing file)");
}

ApproxConfig approx_of(const ApproxOptions& o) {
  auto cfg = level_to_config(o.level);
  if (o.overlap >= 0.0) cfg.overlap_fraction = o.overlap;
  if (o.fft_len != 0) cfg.fft_length = o.fft_len;
  if (o.perforation_stride != 0) cfg.perforation_stride = o.perforation_stride;
  cfg.validate();
  return cfg;
}

// ---- extract ---------------------------------------------------------------

int cmd_extract(const ExtractOptions& o, std::ostream& out) {
  const auto loaded = load_input(o.in);
  const auto profile = profile_of(o.in.profile);
  const auto cfg = approx_of(o.approx);
  const auto features =
      extract_epoch_features(loaded.record, profile, cfg, epoch_of(o.in));

  emit(o.output, out, [&](std::ostream& os) {
    os << "epoch,channel";
    for (const auto& b : profile.bands) os << ',' << b.name;
    os << '\n';
    for (std::size_t e = 0; e < features.size(); ++e) {
      const auto& fv = features[e];
      for (std::size_t c = 0; c < fv.channel_names.size(); ++c) {
        os << e << ',' << fv.channel_names[c];
        for (std::size_t b = 0; b < kBandCount; ++b) os << ',' << fmt_exact(fv.at(c, b));
        os << '\n';
      }
    }
  });
  return kExitOk;
}

// ---- sweep -----------------------------------------------------------------

std::unique_ptr<Classifier> classifier_for(const SweepCmdOptions& o, const EegRecord& rec,
                                           const BandProfile& profile,
                                           const EpochSpec& epoch, json& info) {
  if (!o.predictions.empty()) {
    auto ext = load_external_predictions(o.predictions);
    info = {{"kind", "external"},
            {"path", o.predictions},
            {"sha256", sha256_file(o.predictions)}};
    return std::make_unique<ExternalPredictions>(std::move(ext));
  }
  if (!rec.labels()) {
    throw DomainError(
        "sweep needs per-epoch labels to train the nearest-centroid classifier "
        "(add a label column, use --synthetic, or pass --predictions)");
  }
  if (epoch.stride_samples != epoch.epoch_length_samples) {
    throw DomainError("training on labels needs --epoch-stride equal to --epoch-len");
  }
  const auto feats = extract_epoch_features(rec, profile, level_to_config(0), epoch);
  std::vector<int> labels(rec.labels()->begin(),
                          rec.labels()->begin() + static_cast<std::ptrdiff_t>(feats.size()));
  auto clf = train_nearest_centroid(feats, labels);
  info = {{"kind", "nearest_centroid"},
          {"trained_on", "level 0 features, dataset labels"},
          {"classes", clf.labels()}};
  return std::make_unique<NearestCentroid>(std::move(clf));
}

void print_summary(std::ostream& os, std::span<const SweepRecord> rs) {
  os << "records: " << rs.size() << " (perf_hb_s measured on host; cluster and "
     << "frequency emulated, see manifest)\n";
  if (rs.empty()) return;
  auto row = [&](const char* name, auto get) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& r : rs) {
      lo = std::min(lo, get(r));
      hi = std::max(hi, get(r));
    }
    os << std::left << std::setw(12) << name << std::setw(16) << fmt_short(lo)
       << fmt_short(hi) << '\n';
  };
  os << std::left << std::setw(12) << "axis" << std::setw(16) << "min" << "max\n";
  row("power_w", [](const SweepRecord& r) { return r.power_w; });
  row("perf_hb_s", [](const SweepRecord& r) { return r.perf_hb_s; });
  row("accuracy", [](const SweepRecord& r) { return r.accuracy; });
}

int cmd_sweep(const SweepCmdOptions& o, std::ostream& out) {
  const auto loaded = load_input(o.in);
  const auto profile = profile_of(o.in.profile);
  const auto epoch = epoch_of(o.in);

  std::vector<PlatformConfig> platforms;
  for (int f : o.freqs) {
    for (const auto& c : o.clusters) {
      for (int n : o.cores) {
        PlatformConfig p{parse_cluster(c), n, f};
        p.validate();
        platforms.push_back(p);
      }
    }
  }
  if (platforms.empty()) throw DomainError("empty platform grid");

  std::vector<PowerAnchor> anchors;
  json calibration_source;
  if (o.calibration.empty()) {
    anchors = default_power_anchors();
    calibration_source = "built-in anchors";
  } else {
    anchors = parse_power_anchors(read_file(o.calibration));
    calibration_source = {{"path", o.calibration}, {"sha256", sha256_file(o.calibration)}};
  }
  const auto cal = calibrate_power(anchors);

  json classifier_info;
  const auto clf = classifier_for(o, loaded.record, profile, epoch, classifier_info);

  SweepOptions sopts;
  sopts.epoch = epoch;
  sopts.truth = o.truth == "labels" ? TruthSource::dataset_labels
                                    : TruthSource::baseline_predictions;
  sopts.duration_s = o.duration_s;
  sopts.repetitions = o.repetitions;
  sopts.min_heartbeats = o.min_heartbeats;
  sopts.little_throughput_multiplier = o.little_multiplier;

  const auto result = run_sweep(loaded.record, profile, *clf, platforms, o.levels,
                                cal.params, sopts);

  std::ostringstream csv;
  write_sweep_csv(csv, result.records);
  emit(o.output, out, [&](std::ostream& os) { os << csv.str(); });

  json anchors_json = json::array();
  for (const auto& a : anchors) {
    anchors_json.push_back({{"cluster", cluster_name(a.platform.cluster)},
                            {"cores", a.platform.cores},
                            {"freq_mhz", a.platform.freq_mhz},
                            {"watts", a.watts}});
  }
  json measurements = json::array();
  for (const auto& m : result.measurements) {
    measurements.push_back({{"workers", m.workers},
                            {"level", m.level},
                            {"heartbeats_per_s_median", m.result.heartbeats_per_s},
                            {"repetition_rates", m.result.repetition_rates},
                            {"repetition_heartbeats", m.result.repetition_heartbeats}});
  }
  json manifest = {
      {"command", "sweep"},
      {"tool_version", kVersion},
      {"timestamp", utc_timestamp()},
      {"parameters",
       {{"profile", o.in.profile},
        {"sample_rate_hz", loaded.record.sample_rate_hz()},
        {"channels", loaded.record.channel_names()},
        {"epoch_length_samples", epoch.epoch_length_samples},
        {"epoch_stride_samples", epoch.stride_samples},
        {"clusters", o.clusters},
        {"cores", o.cores},
        {"freqs_mhz", o.freqs},
        {"levels", o.levels},
        {"truth", o.truth},
        {"duration_s", o.duration_s},
        {"repetitions", o.repetitions},
        {"min_heartbeats", o.min_heartbeats}}},
      {"inputs", {loaded.digest}},
      {"classifier", classifier_info},
      {"calibration",
       {{"source", calibration_source},
        {"anchors", anchors_json},
        {"params",
         {{"LITTLE",
           {{"static_w", cal.params.little.static_w},
            {"dyn_coeff_w", cal.params.little.dyn_coeff_w}}},
          {"big",
           {{"static_w", cal.params.big.static_w},
            {"dyn_coeff_w", cal.params.big.dyn_coeff_w}}}}},
        {"rms_residual_w",
         {{"LITTLE", cal.little_rms_residual_w}, {"big", cal.big_rms_residual_w}}}}},
      {"harness",
       {{"host", host_name()},
        {"hardware_threads", std::thread::hardware_concurrency()},
        {"repetitions", o.repetitions},
        {"duration_s", o.duration_s},
        {"statistic", "median"},
        {"heartbeat", "one per completed per-epoch feature vector"},
        {"measurements", measurements}}},
      {"emulation",
       {{"little_throughput_multiplier", o.little_multiplier},
        {"reference_freq_mhz", sopts.reference_freq_mhz},
        {"frequency", "emulated: perf_hb_s scaled by freq_mhz / reference_freq_mhz"},
        {"cluster", "emulated: LITTLE perf_hb_s scaled by little_throughput_multiplier"},
        {"power", "modeled: static_w + cores * dyn_coeff_w * (freq_mhz / 1000)^3"}}},
      {"measured_columns", {"perf_hb_s"}},
      {"output", {{"path", o.output}, {"sha256", sha256_hex(csv.str())}}},
  };

  const std::string manifest_path =
      !o.manifest.empty() ? o.manifest : (o.output.empty() ? "" : o.output + ".json");
  if (!manifest_path.empty()) {
    std::ofstream mf(manifest_path);
    if (!mf) throw LookupError("cannot write " + manifest_path);
    mf << manifest.dump(2) << '\n';
  }

  // With the CSV on stdout the summary would corrupt it.
  if (!o.output.empty()) print_summary(out, result.records);
  return kExitOk;
}

// ---- pareto ----------------------------------------------------------------

int cmd_pareto(const ParetoOptions& o, std::ostream& out, std::ostream& err) {
  const auto table = parse_sweep_csv(read_file(o.input));
  std::vector<std::size_t> front;
  if (!table.records.empty()) front = pareto_indices(table.records);
  emit(o.output, out, [&](std::ostream& os) {
    os << kSweepCsvHeader << '\n';
    for (auto i : front) os << table.lines[i] << '\n';
  });
  (o.output.empty() ? err : out) << "front size: " << front.size() << " of "
                                 << table.records.size() << '\n';
  return kExitOk;
}

// ---- plotdata --------------------------------------------------------------

std::string axis_value(const SweepRecord& r, const std::string& axis) {
  if (axis == "power") return fmt_short(r.power_w);
  if (axis == "perf") return fmt_short(r.perf_hb_s);
  if (axis == "accuracy") return fmt_short(r.accuracy);
  if (axis == "level") return std::to_string(r.level);
  return std::to_string(r.platform.cores);
}

int cmd_plotdata(const PlotOptions& o, std::ostream& out) {
  const auto table = parse_sweep_csv(read_file(o.input));

  std::vector<std::tuple<Cluster, int, int>> group_order;
  std::map<std::tuple<Cluster, int, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    const auto& p = table.records[i].platform;
    const auto key = std::make_tuple(p.cluster, p.cores, p.freq_mhz);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) group_order.push_back(key);
    it->second.push_back(i);
  }

  emit(o.output, out, [&](std::ostream& os) {
    for (std::size_t g = 0; g < group_order.size(); ++g) {
      const auto& [cluster, cores, freq] = group_order[g];
      if (g > 0) os << "\n\n";
      os << "# cluster=" << cluster_name(cluster) << " cores=" << cores
         << " freq_mhz=" << freq << " columns=";
      for (std::size_t a = 0; a < o.axes.size(); ++a) os << (a ? "," : "") << o.axes[a];
      os << '\n';
      for (auto i : groups[group_order[g]]) {
        for (std::size_t a = 0; a < o.axes.size(); ++a) {
          os << (a ? " " : "") << axis_value(table.records[i], o.axes[a]);
        }
        os << '\n';
      }
    }
  });
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate Welch band-power features and power/performance/accuracy "
               "design-space sweeps",
               "eegapprox"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ExtractOptions ex;
  auto* extract = app.add_subcommand("extract", "Per-epoch band-power features as CSV");
  add_input_flags(*extract, ex.in);
  extract->add_option("--level", ex.approx.level, "Approximation level 0..5")
      ->check(CLI::Range(kMinLevel, kMaxLevel));
  extract->add_option("--overlap", ex.approx.overlap, "Window overlap fraction [0, 0.5]")
      ->check(CLI::Range(0.0, 0.5));
  extract->add_option("--fft-len", ex.approx.fft_len, "FFT length")
      ->check(CLI::IsMember({256, 512, 1024, 2048}));
  extract->add_option("--perforation-stride", ex.approx.perforation_stride,
                      "Zero every k-th sample of each segment")
      ->check(CLI::PositiveNumber);
  extract->add_option("--output,-o", ex.output, "Output file (default stdout)");

  SweepCmdOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Power/performance/accuracy sweep");
  add_input_flags(*sweep, sw.in);
  sweep->add_option("--clusters", sw.clusters, "Clusters (LITTLE,big)")->delimiter(',');
  sweep->add_option("--cores", sw.cores, "Core counts")
      ->delimiter(',')
      ->check(CLI::Range(1, kMaxCores));
  sweep->add_option("--freqs", sw.freqs, "Frequencies in MHz")
      ->delimiter(',')
      ->check(CLI::IsMember({600, 1000, 1400}));
  sweep->add_option("--levels", sw.levels, "Approximation levels")
      ->delimiter(',')
      ->check(CLI::Range(kMinLevel, kMaxLevel));
  sweep->add_option("--calibration", sw.calibration,
                    "Power anchors CSV: cluster,cores,freq_mhz,watts")
      ->check(CLI::ExistingFile);
  sweep->add_option("--predictions", sw.predictions,
                    "External per-epoch predictions, one label per line")
      ->check(CLI::ExistingFile);
  sweep->add_option("--truth", sw.truth, "Accuracy truth: baseline or labels")
      ->check(CLI::IsMember({"baseline", "labels"}));
  sweep->add_option("--duration", sw.duration_s, "Seconds per throughput repetition")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--repetitions", sw.repetitions, "Repetitions per measurement")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--min-heartbeats", sw.min_heartbeats,
                    "Minimum heartbeats per repetition");
  sweep->add_option("--little-multiplier", sw.little_multiplier,
                    "LITTLE/big per-core throughput ratio")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--output,-o", sw.output, "Sweep CSV (default stdout)");
  sweep->add_option("--manifest", sw.manifest, "Manifest JSON (default <output>.json)");

  ParetoOptions po;
  auto* pareto = app.add_subcommand("pareto", "Non-dominated rows of a sweep CSV");
  pareto->add_option("--input", po.input, "Sweep CSV")->required()->check(CLI::ExistingFile);
  pareto->add_option("--output,-o", po.output, "Output file (default stdout)");

  PlotOptions pl;
  auto* plot = app.add_subcommand("plotdata", "Whitespace-separated tables for plotting");
  plot->add_option("--input", pl.input, "Sweep CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("--axes", pl.axes, "Columns: power, perf, accuracy, level, cores")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"power", "perf", "accuracy", "level", "cores"}));
  plot->add_option("--output,-o", pl.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "eegapprox: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*extract) return cmd_extract(ex, out);
    if (*sweep) return cmd_sweep(sw, out);
    if (*pareto) return cmd_pareto(po, out, err);
    if (*plot) return cmd_plotdata(pl, out);
  } catch (const MeasurementError& e) {
    err << "eegapprox: measurement error: " << e.what() << '\n';
    return kExitMeasurement;
  } catch (const std::exception& e) {
    err << "eegapprox: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eegapprox::cli
