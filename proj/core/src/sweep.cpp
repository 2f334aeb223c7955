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

#include "eegapprox/sweep.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eegapprox/classifier.hpp"
#include "eegapprox/errors.hpp"

namespace eegapprox {

std::uint64_t windows_per_pass(const EegRecord& dataset,
                               const ApproxConfig& cfg, const EpochSpec& epoch) {
  const auto epochs = epoch.offsets(dataset.sample_count()).size();
  const auto per_epoch =
      num_windows(epoch.epoch_length_samples, cfg.fft_length, cfg.overlap_fraction);
  return static_cast<std::uint64_t>(dataset.channel_count()) * epochs * per_epoch;
}

SweepResult run_sweep(const EegRecord& dataset, const BandProfile& profile,
                      const Classifier& clf,
                      std::span<const PlatformConfig> platforms,
                      std::span<const int> levels,
                      const PowerModelParams& params,
                      const SweepOptions& options) {
  if (platforms.empty()) throw DomainError("sweep needs at least one platform");
  if (levels.empty()) throw DomainError("sweep needs at least one level");
  if (!(options.little_throughput_multiplier > 0.0) ||
      !(options.reference_freq_mhz > 0.0)) {
    throw DomainError("emulation multipliers must be positive");
  }
  for (const auto& p : platforms) p.validate();
  for (int l : levels) level_to_config(l);
  params.validate();
  options.epoch.validate();

  const ApproxConfig baseline = level_to_config(0);
  AccuracyOptions acc_opts;
  acc_opts.epoch = options.epoch;
  acc_opts.truth = options.truth;
  acc_opts.positive_label = options.positive_label;

  std::map<int, double> accuracy_by_level;
  std::map<int, std::uint64_t> windows_by_level;
  for (int l : levels) {
    if (accuracy_by_level.contains(l)) continue;
    const auto cfg = level_to_config(l);
    accuracy_by_level[l] =
        approximation_accuracy(dataset, profile, clf, cfg, baseline, acc_opts);
    windows_by_level[l] = windows_per_pass(dataset, cfg, options.epoch);
  }

  SweepResult out;
  // Host throughput depends only on (workers, level); cluster and frequency
  // are emulated on top of it.
  std::vector<std::pair<std::size_t, int>> keys;
  std::vector<HarnessJob> jobs;
  for (const auto& p : platforms) {
    for (int l : levels) {
      const auto key = std::make_pair(static_cast<std::size_t>(p.cores), l);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(key);
      jobs.push_back({make_extraction_workload(dataset, profile, level_to_config(l),
                                               options.epoch),
                      key.first});
    }
  }
  HarnessOptions h;
  h.duration_s = options.duration_s;
  h.repetitions = options.repetitions;
  h.min_heartbeats = options.min_heartbeats;
  auto results = run_interleaved_harness(jobs, h);

  std::map<std::pair<std::size_t, int>, double> measured;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    measured[keys[i]] = results[i].heartbeats_per_s;
    out.measurements.push_back({keys[i].first, keys[i].second, std::move(results[i])});
  }

  out.records.reserve(platforms.size() * levels.size());
  for (const auto& p : platforms) {
    const double power = model_power(params, p);
    const double cluster_scale =
        p.cluster == Cluster::little ? options.little_throughput_multiplier : 1.0;
    const double freq_scale =
        static_cast<double>(p.freq_mhz) / options.reference_freq_mhz;
    for (int l : levels) {
      SweepRecord r;
      r.platform = p;
      r.level = l;
      r.power_w = power;
      r.perf_hb_s = measured.at({static_cast<std::size_t>(p.cores), l}) *
                    cluster_scale * freq_scale;
      r.accuracy = accuracy_by_level.at(l);
      r.windows_processed = windows_by_level.at(l);
      out.records.push_back(r);
    }
  }
  return out;
}

}  // namespace eegapprox
