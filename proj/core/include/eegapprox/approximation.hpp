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
#include <span>
#include <vector>

namespace eegapprox {

// The three approximation knobs of the Welch pipeline.
struct ApproxConfig {
  double overlap_fraction = 0.5;   // [0, 0.5]
  std::size_t fft_length = 1024;   // one of 256, 512, 1024, 2048
  std::size_t perforation_stride = 1;  // 1 = no perforation

  void validate() const;

  bool operator==(const ApproxConfig&) const = default;
};

inline constexpr int kMinLevel = 0;
inline constexpr int kMaxLevel = 5;

// Level 0 is the accurate 50%-overlap configuration; each level removes
// another 10 percentage points of overlap.
ApproxConfig level_to_config(int level);

struct SegmentPlan {
  std::vector<std::size_t> offsets;
  std::size_t segment_length = 0;
};

// Integer hop between nominal segment starts, round(W * (1 - o)).
std::size_t hop_length(std::size_t segment_length, double overlap_fraction);

// Offsets 0, H, 2H, ... plus one end-aligned segment at N - W if the nominal
// grid stops short of it; every sample is covered.
SegmentPlan segment_plan(std::size_t signal_length, std::size_t segment_length,
                         double overlap_fraction);

// Closed-form size of segment_plan: ceil((N - W) / H) + 1.
std::size_t num_windows(std::size_t signal_length, std::size_t segment_length,
                        double overlap_fraction);

// Zeroes every stride-th sample (indices i with i % stride == stride - 1).
std::vector<double> apply_perforation(std::span<const double> segment,
                                      std::size_t stride);

// In-place variant used on the hot path.
void perforate_in_place(std::span<double> segment, std::size_t stride);

}  // namespace eegapprox
