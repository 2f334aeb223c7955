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

#include <array>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>

#include "eegapprox/welch.hpp"

namespace eegapprox {

enum class Application { seizure, sleep, stress, custom };

inline constexpr std::size_t kBandCount = 5;
inline constexpr std::array<std::string_view, kBandCount> kBandNames = {
    "delta", "theta", "alpha", "beta", "gamma"};

// Upper edge meaning "up to and including Nyquist".
inline constexpr double kOpenUpperEdge =
    std::numeric_limits<double>::infinity();

struct Band {
  std::string name;
  double low_hz = 0.0;
  double high_hz = 0.0;

  bool operator==(const Band&) const = default;
};

struct BandProfile {
  Application application = Application::custom;
  std::array<Band, kBandCount> bands;

  // Throws DomainError on inverted or out-of-order bands.
  void validate() const;
};

BandProfile builtin_profile(Application app);

// "seizure" | "sleep" | "stress"; throws LookupError otherwise.
Application parse_application(std::string_view name);
std::string_view application_name(Application app);

// One `name,low_hz,high_hz` line per band, delta..gamma. `inf` or `nyquist`
// as high_hz leaves the band open to Nyquist. Blank lines and '#' comments
// are ignored.
BandProfile parse_profile(std::string_view text);
BandProfile load_profile_file(const std::filesystem::path& path);

// PSD mass over bins with low <= f < high, times the bin width. Bands past
// Nyquist are clipped; an open upper edge includes the Nyquist bin.
double band_power(const PsdEstimate& psd, double low_hz, double high_hz);

}  // namespace eegapprox
