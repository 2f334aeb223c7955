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

#include <random>

#include "eegapprox/approximation.hpp"
#include "eegapprox/errors.hpp"

using namespace eegapprox;

TEST(LevelToConfig, LadderStepsOverlapByTenPoints) {
  const double expected[] = {0.5, 0.4, 0.3, 0.2, 0.1, 0.0};
  for (int level = 0; level <= 5; ++level) {
    const auto cfg = level_to_config(level);
    EXPECT_EQ(cfg.overlap_fraction, expected[level]) << level;
    EXPECT_EQ(cfg.fft_length, 1024u);
    EXPECT_EQ(cfg.perforation_stride, 1u);
  }
}

TEST(LevelToConfig, OutOfRange) {
  EXPECT_THROW(level_to_config(-1), DomainError);
  EXPECT_THROW(level_to_config(6), DomainError);
}

TEST(ApproxConfig, Validation) {
  ApproxConfig c;
  EXPECT_NO_THROW(c.validate());
  c.overlap_fraction = 0.6;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.fft_length = 4096;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.perforation_stride = 0;
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(SegmentPlan, ThreeWindowLengths) {
  for (std::size_t w : {256u, 1024u}) {
    EXPECT_EQ(segment_plan(3 * w, w, 0.5).offsets.size(), 5u);
    EXPECT_EQ(segment_plan(3 * w, w, 0.25).offsets.size(), 4u);
    EXPECT_EQ(segment_plan(3 * w, w, 0.0).offsets.size(), 3u);
  }
  // 25% overlap: nominal hop 768 reaches 1536; the end-aligned window at
  // 2048 completes coverage.
  EXPECT_EQ(segment_plan(3072, 1024, 0.25).offsets,
            (std::vector<std::size_t>{0, 768, 1536, 2048}));
}

TEST(SegmentPlan, ShortSignal) {
  EXPECT_THROW(segment_plan(100, 256, 0.5), InsufficientDataError);
  EXPECT_EQ(segment_plan(256, 256, 0.5).offsets, (std::vector<std::size_t>{0}));
}

TEST(NumWindows, ClosedFormExamples) {
  EXPECT_EQ(num_windows(3072, 1024, 0.5), 5u);
  EXPECT_EQ(num_windows(3072, 1024, 0.25), 4u);
  EXPECT_EQ(num_windows(3072, 1024, 0.0), 3u);
  for (double o : {0.0, 0.1, 0.5}) EXPECT_EQ(num_windows(1024, 1024, o), 1u);
  EXPECT_THROW(num_windows(1000, 1024, 0.5), DomainError);
}

TEST(SegmentPlanProperty, CountCoverageAndOrdering) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> log_w(1, 11);
  std::uniform_real_distribution<double> overlap(0.0, 0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t w = std::size_t{1} << log_w(rng);
    const std::size_t n = w + std::uniform_int_distribution<std::size_t>(0, 8 * w)(rng);
    const double o = trial % 5 == 0 ? 0.5 : overlap(rng);
    const auto plan = segment_plan(n, w, o);

    ASSERT_EQ(plan.offsets.size(), num_windows(n, w, o)) << n << ' ' << w << ' ' << o;
    ASSERT_EQ(plan.offsets.front(), 0u);
    ASSERT_EQ(plan.offsets.back(), n - w);
    for (std::size_t i = 1; i < plan.offsets.size(); ++i) {
      ASSERT_LT(plan.offsets[i - 1], plan.offsets[i]);
      // Consecutive windows touch or overlap, so the union is [0, n).
      ASSERT_LE(plan.offsets[i], plan.offsets[i - 1] + w);
    }
  }
}

TEST(SegmentPlanProperty, HalfOverlapTilesExactly) {
  for (std::size_t w : {64u, 256u, 1024u}) {
    for (std::size_t halves = 2; halves < 20; ++halves) {
      const auto plan = segment_plan(halves * w / 2, w, 0.5);
      for (std::size_t i = 0; i < plan.offsets.size(); ++i) {
        EXPECT_EQ(plan.offsets[i], i * w / 2);
      }
    }
  }
}

TEST(NumWindowsProperty, NonIncreasingAsOverlapShrinks) {
  for (std::size_t n = 1024; n < 40000; n += 977) {
    std::size_t prev = num_windows(n, 1024, 0.5);
    for (int level = 1; level <= 5; ++level) {
      const auto cur = num_windows(n, 1024, level_to_config(level).overlap_fraction);
      EXPECT_LE(cur, prev) << n << " level " << level;
      prev = cur;
    }
  }
}

TEST(NumWindowsProperty, NoOverlapHalvesWindowCountAsymptotically) {
  double last_gap = 1.0;
  for (std::size_t ratio : {4u, 16u, 64u, 256u, 1024u}) {
    const double r = double(num_windows(ratio * 1024, 1024, 0.0)) /
                     double(num_windows(ratio * 1024, 1024, 0.5));
    const double gap = std::abs(r - 0.5);
    EXPECT_LE(gap, last_gap);
    last_gap = gap;
  }
  EXPECT_LT(last_gap, 1e-3);
}

TEST(Perforation, StrideOneIsIdentity) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  EXPECT_EQ(apply_perforation(x, 1), x);
}

TEST(Perforation, StrideTwoZeroesOddIndices) {
  const std::vector<double> x{1, 1, 1, 1};
  EXPECT_EQ(apply_perforation(x, 2), (std::vector<double>{1, 0, 1, 0}));
}

TEST(Perforation, CountsIntroducedZeros) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (std::size_t len : {1u, 3u, 4u, 17u, 1024u}) {
    std::vector<double> x(len);
    for (auto& v : x) v = u(rng);
    const auto y = apply_perforation(x, 4);
    ASSERT_EQ(y.size(), len);
    EXPECT_EQ(std::size_t(std::count(y.begin(), y.end(), 0.0)), len / 4);
  }
  EXPECT_THROW(apply_perforation(std::vector<double>{1.0}, 0), DomainError);
}
