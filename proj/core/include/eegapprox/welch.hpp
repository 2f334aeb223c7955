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

#include "eegapprox/approximation.hpp"

namespace eegapprox {

class WorkerPool;

// One-sided Welch estimate. bin_power[k] is the density at k * bin_width_hz,
// k = 0..fft_length/2.
struct PsdEstimate {
  std::vector<double> bin_power;
  double bin_width_hz = 0.0;
  std::size_t segments_used = 0;

  double nyquist_hz() const noexcept {
    return bin_width_hz * static_cast<double>(bin_power.size() - 1);
  }
};

// Welch/WOSA: segment per segment_plan, perforate the raw segment, apply the
// Bartlett-Hanning window, take |FFT|^2 / (fs * sum w^2), fold to one side
// (interior bins doubled) and average over all segments.
//
// With a pool the per-segment periodograms run concurrently; the average is
// still accumulated in segment order so the result does not depend on the
// pool size.
PsdEstimate welch_psd(std::span<const double> signal, const ApproxConfig& cfg,
                      double sample_rate_hz, WorkerPool* pool = nullptr);

// Single-segment one-sided periodogram with an arbitrary window. Exposed for
// tests (a rectangular window of ones gives the raw periodogram).
std::vector<double> periodogram(std::span<const double> segment,
                                std::span<const double> window,
                                double sample_rate_hz);

}  // namespace eegapprox
