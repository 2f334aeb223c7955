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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eegapprox/bands.hpp"
#include "eegapprox/evaluation.hpp"
#include "eegapprox/harness.hpp"
#include "eegapprox/power_model.hpp"
#include "eegapprox/signal_io.hpp"

namespace eegapprox {

class Classifier;

struct SweepRecord {
  PlatformConfig platform;
  int level = 0;
  double power_w = 0.0;
  double perf_hb_s = 0.0;
  double accuracy = 0.0;
  std::uint64_t windows_processed = 0;

  bool operator==(const SweepRecord&) const = default;
};

struct SweepOptions {
  EpochSpec epoch;
  TruthSource truth = TruthSource::baseline_predictions;
  int positive_label = 1;
  double duration_s = 0.5;
  std::size_t repetitions = 3;
  std::uint64_t min_heartbeats = 50;
  // Throughput of one LITTLE core relative to one big core at equal clock.
  double little_throughput_multiplier = 0.35;
  // Frequency at which measured host throughput is taken as-is.
  double reference_freq_mhz = 1400.0;
};

// Raw host measurement behind the emulated perf numbers.
struct HostMeasurement {
  std::size_t workers = 0;
  int level = 0;
  HarnessResult result;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<HostMeasurement> measurements;
};

// One record per (platform, level), platform-major. Host throughput is
// measured once per (workers = cores, level) and scaled by the emulated
// cluster multiplier and freq_mhz / reference_freq_mhz; power comes from the
// model; accuracy from approximation_accuracy against level 0. Measurements
// run one at a time, interleaved across (workers, level) per repetition.
SweepResult run_sweep(const EegRecord& dataset, const BandProfile& profile,
                      const Classifier& clf,
                      std::span<const PlatformConfig> platforms,
                      std::span<const int> levels,
                      const PowerModelParams& params,
                      const SweepOptions& options);

// Number of windows one pass over the dataset's epochs processes.
std::uint64_t windows_per_pass(const EegRecord& dataset,
                               const ApproxConfig& cfg, const EpochSpec& epoch);

}  // namespace eegapprox
