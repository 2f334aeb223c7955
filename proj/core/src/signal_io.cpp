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

#include "eegapprox/signal_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "eegapprox/errors.hpp"

namespace eegapprox {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

template <typename T>
bool parse_number(std::string_view cell, T& out) {
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return ec == std::errc() && ptr == end;
}

int majority_label(std::span<const int> labels) {
  std::map<int, std::size_t> votes;
  for (int l : labels) ++votes[l];
  // std::map iterates in ascending order, so the first maximum is the
  // smallest tied label.
  auto best = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

}  // namespace

void EpochSpec::validate() const {
  if (epoch_length_samples == 0) {
    throw DomainError("epoch length must be positive");
  }
  if (stride_samples == 0 || stride_samples > epoch_length_samples) {
    throw DomainError("epoch stride must be in [1, epoch length]");
  }
}

std::vector<std::size_t> EpochSpec::offsets(std::size_t sample_count) const {
  validate();
  std::vector<std::size_t> out;
  for (std::size_t off = 0; off + epoch_length_samples <= sample_count;
       off += stride_samples) {
    out.push_back(off);
  }
  return out;
}

EegRecord::EegRecord(std::vector<Channel> channels, double sample_rate_hz,
                     std::optional<std::vector<int>> labels,
                     std::size_t label_epoch_length)
    : channels_(std::move(channels)),
      sample_rate_hz_(sample_rate_hz),
      labels_(std::move(labels)),
      label_epoch_length_(label_epoch_length) {
  if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
    throw DomainError("sample rate must be positive");
  }
  for (const auto& ch : channels_) {
    if (ch.samples.size() != channels_.front().samples.size()) {
      throw StructuralError("channel '" + ch.name +
                            "' has a different sample count");
    }
  }
  if (labels_) {
    if (label_epoch_length_ == 0) {
      throw DomainError("labels require a positive epoch length");
    }
    if (labels_->size() != sample_count() / label_epoch_length_) {
      throw StructuralError("label count does not match epoch count");
    }
  }
}

std::size_t EegRecord::sample_count() const noexcept {
  return channels_.empty() ? 0 : channels_.front().samples.size();
}

std::vector<std::string> EegRecord::channel_names() const {
  std::vector<std::string> names;
  names.reserve(channels_.size());
  for (const auto& ch : channels_) names.push_back(ch.name);
  return names;
}

const Channel& EegRecord::channel(std::string_view name) const {
  for (const auto& ch : channels_) {
    if (ch.name == name) return ch;
  }
  throw LookupError("unknown channel " + std::string(name));
}

EegRecord parse_csv(std::string_view text, double sample_rate_hz,
                    const EpochSpec& epoch) {
  epoch.validate();
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }

  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  }
  if (lines.empty()) throw EmptyInputError("empty input: no header row");

  const auto header = split_commas(lines.front());
  bool has_label = !header.empty() && header.back() == "label";
  const std::size_t signal_columns = header.size() - (has_label ? 1 : 0);
  if (signal_columns == 0) {
    throw StructuralError("header names no signal channels");
  }
  for (const auto& name : header) {
    if (name.empty()) throw StructuralError("empty channel name in header");
  }
  if (lines.size() == 1) throw EmptyInputError("empty input: no sample rows");

  std::vector<Channel> channels(signal_columns);
  for (std::size_t c = 0; c < signal_columns; ++c) {
    channels[c].name = std::string(header[c]);
    channels[c].samples.reserve(lines.size() - 1);
  }
  std::vector<int> row_labels;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    const auto cells = split_commas(lines[i]);
    if (cells.size() != header.size()) {
      throw StructuralError("row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " columns, expected " +
                            std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < signal_columns; ++c) {
      double v = 0.0;
      if (!parse_number(cells[c], v) || !std::isfinite(v)) {
        throw ParseError("cannot parse '" + std::string(cells[c]) +
                             "' at row " + std::to_string(row) + ", column " +
                             std::to_string(c + 1),
                         row, c + 1);
      }
      channels[c].samples.push_back(v);
    }
    if (has_label) {
      int l = 0;
      if (!parse_number(cells.back(), l)) {
        throw ParseError("cannot parse label '" + std::string(cells.back()) +
                             "' at row " + std::to_string(row) + ", column " +
                             std::to_string(header.size()),
                         row, header.size());
      }
      row_labels.push_back(l);
    }
  }

  std::optional<std::vector<int>> labels;
  if (has_label) {
    const std::size_t len = epoch.epoch_length_samples;
    std::vector<int> per_epoch;
    for (std::size_t e = 0; (e + 1) * len <= row_labels.size(); ++e) {
      per_epoch.push_back(majority_label(
          std::span<const int>(row_labels).subspan(e * len, len)));
    }
    labels = std::move(per_epoch);
  }
  return EegRecord(std::move(channels), sample_rate_hz, std::move(labels),
                   has_label ? epoch.epoch_length_samples : 0);
}

EegRecord load_csv(const std::filesystem::path& path, double sample_rate_hz,
                   const EpochSpec& epoch) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), sample_rate_hz, epoch);
}

EegRecord select_channels(const EegRecord& rec,
                          std::span<const std::string> names) {
  std::vector<Channel> picked;
  picked.reserve(names.size());
  for (const auto& name : names) picked.push_back(rec.channel(name));
  return EegRecord(std::move(picked), rec.sample_rate_hz(), rec.labels(),
                   rec.label_epoch_length());
}

namespace {

void add_tones(std::span<double> out, std::span<const Tone> tones,
               double sample_rate_hz) {
  for (const auto& tone : tones) {
    const double w = 2.0 * std::numbers::pi * tone.freq_hz / sample_rate_hz;
    for (std::size_t n = 0; n < out.size(); ++n) {
      out[n] += tone.amplitude * std::sin(w * static_cast<double>(n));
    }
  }
}

void add_noise(std::span<double> out, double rms, std::mt19937_64& rng) {
  if (rms == 0.0) return;
  std::normal_distribution<double> gauss(0.0, rms);
  for (auto& v : out) v += gauss(rng);
}

void check_tones(std::span<const Tone> tones, double sample_rate_hz) {
  for (const auto& tone : tones) {
    if (!(tone.freq_hz >= 0.0) || tone.freq_hz >= sample_rate_hz / 2.0) {
      throw AliasingError("tone at " + std::to_string(tone.freq_hz) +
                          " Hz is at or above Nyquist (" +
                          std::to_string(sample_rate_hz / 2.0) + " Hz)");
    }
  }
}

}  // namespace

EegRecord synth_signal(std::span<const Tone> tones, double duration_s,
                       double sample_rate_hz, double noise_rms,
                       std::uint64_t seed) {
  if (!(sample_rate_hz > 0.0)) throw DomainError("sample rate must be positive");
  if (!(duration_s > 0.0)) throw DomainError("duration must be positive");
  if (!(noise_rms >= 0.0)) throw DomainError("noise rms must be non-negative");
  check_tones(tones, sample_rate_hz);

  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
  std::vector<double> samples(n, 0.0);
  add_tones(samples, tones, sample_rate_hz);
  std::mt19937_64 rng(seed);
  add_noise(samples, noise_rms, rng);
  return EegRecord({Channel{"ch0", std::move(samples)}}, sample_rate_hz);
}

EegRecord synth_labeled(const LabeledSynthSpec& spec) {
  if (spec.epochs == 0 || spec.epoch_length_samples == 0 || spec.channels == 0) {
    throw DomainError("labeled synth needs epochs, epoch length and channels");
  }
  if (!(spec.sample_rate_hz > 0.0)) {
    throw DomainError("sample rate must be positive");
  }
  check_tones(spec.class0_tones, spec.sample_rate_hz);
  check_tones(spec.class1_tones, spec.sample_rate_hz);

  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> gain(0.8, 1.2);

  const std::size_t len = spec.epoch_length_samples;
  std::vector<Channel> channels(spec.channels);
  for (std::size_t c = 0; c < spec.channels; ++c) {
    channels[c].name = "ch" + std::to_string(c);
    channels[c].samples.assign(spec.epochs * len, 0.0);
  }
  std::vector<int> labels(spec.epochs);
  std::vector<Tone> scaled;
  for (std::size_t e = 0; e < spec.epochs; ++e) {
    labels[e] = coin(rng) ? 1 : 0;
    const auto& tones = labels[e] == 1 ? spec.class1_tones : spec.class0_tones;
    for (auto& ch : channels) {
      scaled.assign(tones.begin(), tones.end());
      for (auto& t : scaled) t.amplitude *= gain(rng);
      auto slice = std::span<double>(ch.samples).subspan(e * len, len);
      add_tones(slice, scaled, spec.sample_rate_hz);
      add_noise(slice, spec.noise_rms, rng);
    }
  }
  return EegRecord(std::move(channels), spec.sample_rate_hz, std::move(labels),
                   len);
}

}  // namespace eegapprox
