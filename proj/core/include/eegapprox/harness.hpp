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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "eegapprox/approximation.hpp"
#include "eegapprox/bands.hpp"
#include "eegapprox/signal_io.hpp"

namespace eegapprox {

// A bag of independent tasks. The harness cycles over them, so a workload
// with few tasks can still be measured for an arbitrary duration.
struct Workload {
  std::size_t task_count = 0;
  // Runs task i and returns a value folded into a sink so the work cannot be
  // optimized away.
  std::function<double(std::size_t)> run_task;
};

// One task per epoch: Welch band-power features for every channel.
Workload make_extraction_workload(const EegRecord& rec,
                                  const BandProfile& profile,
                                  const ApproxConfig& cfg,
                                  const EpochSpec& epoch);

struct HarnessOptions {
  std::size_t workers = 1;
  double duration_s = 0.5;
  std::size_t repetitions = 3;
  std::uint64_t min_heartbeats = 50;
};

struct HarnessResult {
  double heartbeats_per_s = 0.0;             // median over repetitions
  std::vector<double> repetition_rates;      // Hb/s of each repetition
  std::vector<std::uint64_t> repetition_heartbeats;
};

// Workers pull task indices from a shared counter until the deadline and emit
// one heartbeat per completed task. Throws MeasurementError when any
// repetition collects fewer than min_heartbeats.
HarnessResult run_heartbeat_harness(const Workload& workload,
                                    const HarnessOptions& options);

struct HarnessJob {
  Workload workload;
  std::size_t workers = 1;
};

// Measures several jobs round-robin: repetition r of every job runs before
// repetition r + 1 of any job, so slow drift in host speed lands on all jobs
// alike. options.workers is ignored in favour of each job's own count.
std::vector<HarnessResult> run_interleaved_harness(
    std::span<const HarnessJob> jobs, const HarnessOptions& options);

}  // namespace eegapprox
