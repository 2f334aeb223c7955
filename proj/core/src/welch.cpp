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

#include "eegapprox/welch.hpp"

#include <string>

#include "eegapprox/errors.hpp"
#include "eegapprox/fft.hpp"
#include "eegapprox/window.hpp"
#include "eegapprox/worker_pool.hpp"

namespace eegapprox {

namespace {

// Periodogram of one segment into `out` (length N/2 + 1). `scratch` is the
// complex work buffer of length N.
void one_sided_periodogram(std::span<const double> segment,
                           std::span<const double> window, double norm,
                           std::size_t perforation_stride,
                           std::vector<Complex>& scratch,
                           std::span<double> out) {
  const std::size_t n = segment.size();
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Perforation drops the sample before windowing.
    const bool skipped =
        perforation_stride > 1 && i % perforation_stride == perforation_stride - 1;
    scratch[i] = Complex(skipped ? 0.0 : segment[i] * window[i], 0.0);
  }
  cached_fft_plan(n).transform(scratch, false);

  const std::size_t half = n / 2;
  for (std::size_t k = 0; k <= half; ++k) {
    double p = std::norm(scratch[k]) / norm;
    if (k != 0 && k != half) p *= 2.0;
    out[k] = p;
  }
}

}  // namespace

std::vector<double> periodogram(std::span<const double> segment,
                                std::span<const double> window,
                                double sample_rate_hz) {
  if (segment.size() != window.size()) {
    throw DomainError("segment and window lengths differ");
  }
  if (!is_power_of_two(segment.size()) || segment.size() < 2) {
    throw DomainError("segment length must be a power of two >= 2");
  }
  double sum_sq = 0.0;
  for (double w : window) sum_sq += w * w;
  std::vector<Complex> scratch;
  std::vector<double> out(segment.size() / 2 + 1);
  one_sided_periodogram(segment, window, sample_rate_hz * sum_sq, 1, scratch,
                        out);
  return out;
}

PsdEstimate welch_psd(std::span<const double> signal, const ApproxConfig& cfg,
                      double sample_rate_hz, WorkerPool* pool) {
  cfg.validate();
  if (!(sample_rate_hz > 0.0)) throw DomainError("sample rate must be positive");
  const std::size_t w = cfg.fft_length;
  if (signal.size() < w) {
    throw InsufficientDataError("signal of " + std::to_string(signal.size()) +
                                " samples is shorter than one segment of " +
                                std::to_string(w));
  }

  const auto plan = segment_plan(signal.size(), w, cfg.overlap_fraction);
  const auto& window = cached_bartlett_hanning(w);
  const double norm = sample_rate_hz * window.sum_of_squares();
  const std::size_t bins = w / 2 + 1;
  const std::size_t segments = plan.offsets.size();

  PsdEstimate psd;
  psd.bin_power.assign(bins, 0.0);
  psd.bin_width_hz = sample_rate_hz / static_cast<double>(w);
  psd.segments_used = segments;

  if (pool == nullptr || pool->size() == 1 || segments == 1) {
    std::vector<Complex> scratch;
    std::vector<double> seg_power(bins);
    for (std::size_t off : plan.offsets) {
      one_sided_periodogram(signal.subspan(off, w), window.values, norm,
                            cfg.perforation_stride, scratch, seg_power);
      for (std::size_t k = 0; k < bins; ++k) psd.bin_power[k] += seg_power[k];
    }
  } else {
    std::vector<double> per_segment(segments * bins);
    pool->parallel_for(segments, [&](std::size_t s) {
      std::vector<Complex> scratch;
      one_sided_periodogram(signal.subspan(plan.offsets[s], w), window.values,
                            norm, cfg.perforation_stride, scratch,
                            std::span<double>(per_segment).subspan(s * bins, bins));
    });
    for (std::size_t s = 0; s < segments; ++s) {
      for (std::size_t k = 0; k < bins; ++k) {
        psd.bin_power[k] += per_segment[s * bins + k];
      }
    }
  }

  const double inv = 1.0 / static_cast<double>(segments);
  for (auto& p : psd.bin_power) p *= inv;
  return psd;
}

}  // namespace eegapprox
