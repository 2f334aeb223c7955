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

#include "eegapprox/approximation.hpp"

#include <cmath>
#include <string>

#include "eegapprox/errors.hpp"

namespace eegapprox {

void ApproxConfig::validate() const {
  if (!(overlap_fraction >= 0.0 && overlap_fraction <= 0.5)) {
    throw DomainError("overlap fraction must be in [0, 0.5]");
  }
  if (fft_length != 256 && fft_length != 512 && fft_length != 1024 &&
      fft_length != 2048) {
    throw DomainError("fft length must be one of 256, 512, 1024, 2048; got " +
                      std::to_string(fft_length));
  }
  if (perforation_stride < 1) {
    throw DomainError("perforation stride must be >= 1");
  }
}

ApproxConfig level_to_config(int level) {
  if (level < kMinLevel || level > kMaxLevel) {
    throw DomainError("approximation level must be in 0..5, got " +
                      std::to_string(level));
  }
  ApproxConfig cfg;
  // (5 - level) / 10 is the correctly rounded double of 0.5 - 0.1 * level;
  // evaluating the subtraction in floating point is not.
  cfg.overlap_fraction = static_cast<double>(kMaxLevel - level) / 10.0;
  return cfg;
}

std::size_t hop_length(std::size_t segment_length, double overlap_fraction) {
  if (!(overlap_fraction >= 0.0 && overlap_fraction <= 0.5)) {
    throw DomainError("overlap fraction must be in [0, 0.5]");
  }
  if (segment_length == 0) throw DomainError("segment length must be positive");
  const auto hop = static_cast<std::size_t>(std::llround(
      static_cast<double>(segment_length) * (1.0 - overlap_fraction)));
  return hop == 0 ? 1 : hop;
}

SegmentPlan segment_plan(std::size_t signal_length, std::size_t segment_length,
                         double overlap_fraction) {
  const std::size_t hop = hop_length(segment_length, overlap_fraction);
  if (signal_length < segment_length) {
    throw InsufficientDataError("signal of " + std::to_string(signal_length) +
                                " samples is shorter than one segment of " +
                                std::to_string(segment_length));
  }
  SegmentPlan plan;
  plan.segment_length = segment_length;
  const std::size_t last = signal_length - segment_length;
  for (std::size_t off = 0; off <= last; off += hop) plan.offsets.push_back(off);
  if (plan.offsets.back() != last) plan.offsets.push_back(last);
  return plan;
}

std::size_t num_windows(std::size_t signal_length, std::size_t segment_length,
                        double overlap_fraction) {
  const std::size_t hop = hop_length(segment_length, overlap_fraction);
  if (signal_length < segment_length) {
    throw DomainError("signal shorter than one window");
  }
  const std::size_t span = signal_length - segment_length;
  return (span + hop - 1) / hop + 1;
}

void perforate_in_place(std::span<double> segment, std::size_t stride) {
  if (stride < 1) throw DomainError("perforation stride must be >= 1");
  if (stride == 1) return;
  for (std::size_t i = stride - 1; i < segment.size(); i += stride) {
    segment[i] = 0.0;
  }
}

std::vector<double> apply_perforation(std::span<const double> segment,
                                      std::size_t stride) {
  std::vector<double> out(segment.begin(), segment.end());
  perforate_in_place(out, stride);
  return out;
}

}  // namespace eegapprox
