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

#include "eegapprox/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "eegapprox/errors.hpp"
#include "eegapprox/features.hpp"

namespace eegapprox {

Workload make_extraction_workload(const EegRecord& rec,
                                  const BandProfile& profile,
                                  const ApproxConfig& cfg,
                                  const EpochSpec& epoch) {
  cfg.validate();
  epoch.validate();
  if (epoch.epoch_length_samples < cfg.fft_length) {
    throw DomainError("epoch shorter than the fft length");
  }
  auto offsets = std::make_shared<const std::vector<std::size_t>>(
      epoch.offsets(rec.sample_count()));
  if (offsets->empty()) {
    throw InsufficientDataError("record holds no complete epoch");
  }
  const std::size_t len = epoch.epoch_length_samples;
  Workload w;
  w.task_count = offsets->size();
  w.run_task = [&rec, profile, cfg, offsets, len](std::size_t i) {
    const auto fv =
        extract_slice_features(rec, profile, cfg, (*offsets)[i], len);
    double s = 0.0;
    for (double v : fv.values) s += v;
    return s;
  };
  return w;
}

namespace {

struct Repetition {
  std::uint64_t heartbeats = 0;
  double elapsed_s = 0.0;
};

Repetition run_once(const Workload& workload, std::size_t workers,
                    double duration_s) {
  using Clock = std::chrono::steady_clock;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> beats{0};
  std::atomic<double> sink{0.0};
  std::mutex error_mutex;
  std::exception_ptr error;

  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(duration_s));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        double local = 0.0;
        try {
          while (Clock::now() < deadline) {
            const auto i = next.fetch_add(1, std::memory_order_relaxed);
            local += workload.run_task(i % workload.task_count);
            beats.fetch_add(1, std::memory_order_relaxed);
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
        sink.fetch_add(local, std::memory_order_relaxed);
      });
    }
  }
  const auto stop = Clock::now();
  if (error) std::rethrow_exception(error);
  return {beats.load(), std::chrono::duration<double>(stop - start).count()};
}

}  // namespace

namespace {

void check_options(const HarnessOptions& options) {
  if (options.repetitions < 1) throw DomainError("harness needs >= 1 repetition");
  if (!(options.duration_s > 0.0)) throw DomainError("duration must be positive");
}

void check_job(const Workload& workload, std::size_t workers) {
  if (workers < 1) throw DomainError("harness needs >= 1 worker");
  if (workload.task_count == 0 || !workload.run_task) {
    throw DomainError("empty workload");
  }
}

void record(HarnessResult& result, const Repetition& rep,
            const HarnessOptions& options) {
  if (rep.heartbeats < options.min_heartbeats) {
    throw MeasurementError(
        "only " + std::to_string(rep.heartbeats) + " heartbeats in " +
        std::to_string(rep.elapsed_s) + " s (need " +
        std::to_string(options.min_heartbeats) +
        "); lengthen the duration or shorten the epochs");
  }
  result.repetition_heartbeats.push_back(rep.heartbeats);
  result.repetition_rates.push_back(static_cast<double>(rep.heartbeats) /
                                    rep.elapsed_s);
}

void finish(HarnessResult& result) {
  auto sorted = result.repetition_rates;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  result.heartbeats_per_s =
      m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
}

}  // namespace

HarnessResult run_heartbeat_harness(const Workload& workload,
                                    const HarnessOptions& options) {
  check_job(workload, options.workers);
  check_options(options);
  HarnessResult result;
  for (std::size_t r = 0; r < options.repetitions; ++r) {
    record(result, run_once(workload, options.workers, options.duration_s), options);
  }
  finish(result);
  return result;
}

std::vector<HarnessResult> run_interleaved_harness(
    std::span<const HarnessJob> jobs, const HarnessOptions& options) {
  check_options(options);
  for (const auto& j : jobs) check_job(j.workload, j.workers);
  std::vector<HarnessResult> results(jobs.size());
  for (std::size_t r = 0; r < options.repetitions; ++r) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      record(results[i],
             run_once(jobs[i].workload, jobs[i].workers, options.duration_s),
             options);
    }
  }
  for (auto& res : results) finish(res);
  return results;
}

}  // namespace eegapprox
