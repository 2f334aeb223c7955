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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eegapprox {

struct Channel {
  std::string name;
  std::vector<double> samples;

  bool operator==(const Channel&) const = default;
};

// Fixed-length slicing of a record into classification epochs.
struct EpochSpec {
  std::size_t epoch_length_samples = 0;
  std::size_t stride_samples = 0;

  // Throws DomainError unless 0 < stride <= length.
  void validate() const;

  // Start offsets of every full epoch in a signal of `sample_count` samples.
  std::vector<std::size_t> offsets(std::size_t sample_count) const;
};

// Multi-channel sampled signal. All channels share one sample count; labels,
// when present, hold one integer per non-overlapping epoch of
// `label_epoch_length` samples.
class EegRecord {
 public:
  EegRecord(std::vector<Channel> channels, double sample_rate_hz,
            std::optional<std::vector<int>> labels = std::nullopt,
            std::size_t label_epoch_length = 0);

  const std::vector<Channel>& channels() const noexcept { return channels_; }
  std::size_t channel_count() const noexcept { return channels_.size(); }
  std::size_t sample_count() const noexcept;
  double sample_rate_hz() const noexcept { return sample_rate_hz_; }
  const std::optional<std::vector<int>>& labels() const noexcept {
    return labels_;
  }
  std::size_t label_epoch_length() const noexcept {
    return label_epoch_length_;
  }

  std::vector<std::string> channel_names() const;
  const Channel& channel(std::string_view name) const;

  bool operator==(const EegRecord&) const = default;

 private:
  std::vector<Channel> channels_;
  double sample_rate_hz_;
  std::optional<std::vector<int>> labels_;
  std::size_t label_epoch_length_;
};

// Reads one row per sample instant, one column per channel. A trailing
// `label` column is collapsed to per-epoch labels by majority vote (ties go
// to the smallest label).
EegRecord load_csv(const std::filesystem::path& path, double sample_rate_hz,
                   const EpochSpec& epoch);

// Same as load_csv but from an in-memory document.
EegRecord parse_csv(std::string_view text, double sample_rate_hz,
                    const EpochSpec& epoch);

EegRecord select_channels(const EegRecord& rec,
                          std::span<const std::string> names);

struct Tone {
  double freq_hz = 0.0;
  double amplitude = 0.0;
};

// Sum of sines (zero phase) plus seeded Gaussian noise, single channel "ch0".
EegRecord synth_signal(std::span<const Tone> tones, double duration_s,
                       double sample_rate_hz, double noise_rms,
                       std::uint64_t seed);

// Two-class labeled dataset for desk-scale evaluation. Each epoch draws its
// class with probability 1/2 and is synthesized from that class's tones;
// every channel gets independent noise.
struct LabeledSynthSpec {
  std::size_t epochs = 40;
  std::size_t epoch_length_samples = 2048;
  double sample_rate_hz = 256.0;
  std::size_t channels = 2;
  std::vector<Tone> class0_tones{{4.0, 2.0}};
  std::vector<Tone> class1_tones{{20.0, 2.0}};
  double noise_rms = 1.0;
  std::uint64_t seed = 1;
};

EegRecord synth_labeled(const LabeledSynthSpec& spec);

}  // namespace eegapprox
