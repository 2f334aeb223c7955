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

#include <gtest/gtest.h>

#include <limits>

#include <atomic>
#include <chrono>
#include <thread>

#include "eegapprox/errors.hpp"
#include "eegapprox/harness.hpp"
#include "eegapprox/sweep.hpp"

using namespace eegapprox;

namespace {

EegRecord workload_record() {
  LabeledSynthSpec spec;
  spec.epochs = 4;
  spec.epoch_length_samples = 60 * 256 / 4;
  spec.channels = 2;
  return synth_labeled(spec);
}

}  // namespace

TEST(Harness, CountsOneHeartbeatPerTask) {
  std::atomic<std::uint64_t> calls{0};
  Workload w{3, [&](std::size_t) {
               ++calls;
               return 1.0;
             }};
  HarnessOptions opts;
  opts.duration_s = 0.05;
  opts.repetitions = 3;
  const auto r = run_heartbeat_harness(w, opts);
  ASSERT_EQ(r.repetition_rates.size(), 3u);
  std::uint64_t total = 0;
  for (auto b : r.repetition_heartbeats) total += b;
  EXPECT_EQ(total, calls.load());
  EXPECT_GT(r.heartbeats_per_s, 0.0);
}

TEST(Harness, TooFewHeartbeatsIsMeasurementError) {
  Workload slow{1, [](std::size_t) {
                  std::this_thread::sleep_for(std::chrono::milliseconds(20));
                  return 0.0;
                }};
  HarnessOptions opts;
  opts.duration_s = 0.05;
  opts.repetitions = 1;
  EXPECT_THROW(run_heartbeat_harness(slow, opts), MeasurementError);
}

TEST(Harness, PropagatesTaskExceptions) {
  Workload bad{1, [](std::size_t) -> double { throw DomainError("boom"); }};
  HarnessOptions opts;
  opts.duration_s = 0.01;
  opts.repetitions = 1;
  EXPECT_THROW(run_heartbeat_harness(bad, opts), DomainError);
}

TEST(Harness, RejectsBadOptions) {
  Workload w{1, [](std::size_t) { return 0.0; }};
  HarnessOptions opts;
  opts.workers = 0;
  EXPECT_THROW(run_heartbeat_harness(w, opts), DomainError);
  EXPECT_THROW(run_heartbeat_harness(Workload{}, HarnessOptions{}), DomainError);
}

TEST(Harness, MoreApproximationMeansMoreHeartbeats) {
  const auto rec = workload_record();
  const auto profile = builtin_profile(Application::seizure);
  const EpochSpec epoch{rec.sample_count() / 4, rec.sample_count() / 4};
  const std::vector<HarnessJob> jobs{
      {make_extraction_workload(rec, profile, level_to_config(0), epoch), 2},
      {make_extraction_workload(rec, profile, level_to_config(5), epoch), 2}};
  HarnessOptions opts;
  opts.duration_s = 0.3;
  opts.repetitions = 7;
  const auto r = run_interleaved_harness(jobs, opts);
  EXPECT_GT(r[1].heartbeats_per_s, r[0].heartbeats_per_s);
}

TEST(Harness, ThroughputRatioTracksWindowRatio) {
  LabeledSynthSpec spec;
  spec.epochs = 2;
  spec.epoch_length_samples = 60 * 256;
  const auto rec = synth_labeled(spec);
  const auto profile = builtin_profile(Application::seizure);
  const EpochSpec epoch{spec.epoch_length_samples, spec.epoch_length_samples};
  const double window_ratio =
      double(num_windows(epoch.epoch_length_samples, 1024, 0.5)) /
      double(num_windows(epoch.epoch_length_samples, 1024, 0.0));

  const std::vector<HarnessJob> jobs{
      {make_extraction_workload(rec, profile, level_to_config(0), epoch), 1},
      {make_extraction_workload(rec, profile, level_to_config(5), epoch), 1}};
  HarnessOptions opts;
  opts.duration_s = 0.35;
  opts.repetitions = 9;
  const auto r = run_interleaved_harness(jobs, opts);
  const double ratio = r[1].heartbeats_per_s / r[0].heartbeats_per_s;
  EXPECT_NEAR(ratio, window_ratio, 0.25 * window_ratio);
}

TEST(Harness, InterleavedRunsEveryJobEveryRepetition) {
  std::vector<int> order;
  auto job = [&order](int id) {
    return HarnessJob{Workload{1, [&order, id](std::size_t) {
                                 if (order.empty() || order.back() != id) order.push_back(id);
                                 return 0.0;
                               }},
                      1};
  };
  const std::vector<HarnessJob> jobs{job(0), job(1), job(2)};
  HarnessOptions opts;
  opts.duration_s = 0.01;
  opts.repetitions = 3;
  opts.min_heartbeats = 1;
  const auto r = run_interleaved_harness(jobs, opts);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& res : r) {
    EXPECT_EQ(res.repetition_rates.size(), 3u);
    EXPECT_GT(res.heartbeats_per_s, 0.0);
  }
  EXPECT_EQ(order, (std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2}));
}

TEST(Harness, InterleavedRejectsBadJobs) {
  HarnessOptions opts;
  const std::vector<HarnessJob> zero_workers{{Workload{1, [](std::size_t) { return 0.0; }}, 0}};
  EXPECT_THROW(run_interleaved_harness(zero_workers, opts), DomainError);
  const std::vector<HarnessJob> empty{{Workload{}, 1}};
  EXPECT_THROW(run_interleaved_harness(empty, opts), DomainError);
  const std::vector<HarnessJob> slow{{Workload{1, [](std::size_t) { return 0.0; }}, 1}};
  opts.min_heartbeats = std::numeric_limits<std::uint64_t>::max();
  opts.duration_s = 0.01;
  EXPECT_THROW(run_interleaved_harness(slow, opts), MeasurementError);
}

TEST(Harness, FourWorkersBeatOneOnAFourCoreHost) {
  if (std::thread::hardware_concurrency() < 4) {
    GTEST_SKIP() << "host has " << std::thread::hardware_concurrency()
                 << " hardware threads; speedup needs at least 4";
  }
  const auto rec = workload_record();
  const auto profile = builtin_profile(Application::seizure);
  const EpochSpec epoch{rec.sample_count() / 4, rec.sample_count() / 4};
  const auto w = make_extraction_workload(rec, profile, level_to_config(0), epoch);
  HarnessOptions one;
  one.duration_s = 0.3;
  HarnessOptions four = one;
  four.workers = 4;
  EXPECT_GT(run_heartbeat_harness(w, four).heartbeats_per_s,
            run_heartbeat_harness(w, one).heartbeats_per_s);
}

TEST(ExtractionWorkload, RejectsShortRecords) {
  const Tone t{5.0, 1.0};
  const auto rec = synth_signal({&t, 1}, 1.0, 256.0, 0.0, 1);
  EXPECT_THROW(make_extraction_workload(rec, builtin_profile(Application::seizure),
                                        level_to_config(0), EpochSpec{1024, 1024}),
               InsufficientDataError);
}
