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

#include <span>
#include <string>
#include <vector>

#include "eegapprox/approximation.hpp"
#include "eegapprox/bands.hpp"
#include "eegapprox/signal_io.hpp"

namespace eegapprox {

class WorkerPool;

// Five band powers per channel, channel-major.
struct FeatureVector {
  std::vector<std::string> channel_names;
  std::vector<double> values;

  std::size_t dimension() const noexcept { return values.size(); }
  double at(std::size_t channel, std::size_t band) const {
    return values.at(channel * kBandCount + band);
  }

  bool operator==(const FeatureVector&) const = default;
};

// Features over each channel's whole signal.
FeatureVector extract_features(const EegRecord& rec, const BandProfile& profile,
                               const ApproxConfig& cfg,
                               WorkerPool* pool = nullptr);

// Features over one slice [offset, offset + length) of every channel.
FeatureVector extract_slice_features(const EegRecord& rec,
                                     const BandProfile& profile,
                                     const ApproxConfig& cfg,
                                     std::size_t offset, std::size_t length,
                                     WorkerPool* pool = nullptr);

// One FeatureVector per epoch of `epoch`.
std::vector<FeatureVector> extract_epoch_features(const EegRecord& rec,
                                                  const BandProfile& profile,
                                                  const ApproxConfig& cfg,
                                                  const EpochSpec& epoch);

}  // namespace eegapprox
