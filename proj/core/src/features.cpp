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

#include "eegapprox/features.hpp"

#include <string>

#include "eegapprox/errors.hpp"
#include "eegapprox/welch.hpp"

namespace eegapprox {

FeatureVector extract_slice_features(const EegRecord& rec,
                                     const BandProfile& profile,
                                     const ApproxConfig& cfg,
                                     std::size_t offset, std::size_t length,
                                     WorkerPool* pool) {
  if (offset + length > rec.sample_count()) {
    throw DomainError("slice exceeds record length");
  }
  FeatureVector fv;
  fv.channel_names.reserve(rec.channel_count());
  fv.values.reserve(rec.channel_count() * kBandCount);
  for (const auto& ch : rec.channels()) {
    const auto psd = welch_psd(
        std::span<const double>(ch.samples).subspan(offset, length), cfg,
        rec.sample_rate_hz(), pool);
    fv.channel_names.push_back(ch.name);
    for (const auto& band : profile.bands) {
      fv.values.push_back(band_power(psd, band.low_hz, band.high_hz));
    }
  }
  return fv;
}

FeatureVector extract_features(const EegRecord& rec, const BandProfile& profile,
                               const ApproxConfig& cfg, WorkerPool* pool) {
  return extract_slice_features(rec, profile, cfg, 0, rec.sample_count(), pool);
}

std::vector<FeatureVector> extract_epoch_features(const EegRecord& rec,
                                                  const BandProfile& profile,
                                                  const ApproxConfig& cfg,
                                                  const EpochSpec& epoch) {
  cfg.validate();
  epoch.validate();
  if (epoch.epoch_length_samples < cfg.fft_length) {
    throw DomainError("epoch length " +
                      std::to_string(epoch.epoch_length_samples) +
                      " is shorter than the fft length " +
                      std::to_string(cfg.fft_length));
  }
  std::vector<FeatureVector> out;
  for (std::size_t off : epoch.offsets(rec.sample_count())) {
    out.push_back(extract_slice_features(rec, profile, cfg, off,
                                         epoch.epoch_length_samples));
  }
  return out;
}

}  // namespace eegapprox
