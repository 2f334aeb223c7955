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

#include "eegapprox/bands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "eegapprox/errors.hpp"

namespace eegapprox {

void BandProfile::validate() const {
  double prev_low = -1.0;
  for (std::size_t i = 0; i < kBandCount; ++i) {
    const auto& b = bands[i];
    if (b.name != kBandNames[i]) {
      throw DomainError("band " + std::to_string(i) + " must be named " +
                        std::string(kBandNames[i]) + ", got " + b.name);
    }
    if (!(b.low_hz >= 0.0) || !(b.low_hz < b.high_hz)) {
      throw DomainError("band " + b.name + " needs 0 <= low < high");
    }
    if (b.low_hz < prev_low) {
      throw DomainError("band " + b.name + " starts below the previous band");
    }
    prev_low = b.low_hz;
  }
}

BandProfile builtin_profile(Application app) {
  auto make = [app](std::array<std::pair<double, double>, kBandCount> edges) {
    BandProfile p;
    p.application = app;
    for (std::size_t i = 0; i < kBandCount; ++i) {
      p.bands[i] = Band{std::string(kBandNames[i]), edges[i].first,
                        edges[i].second};
    }
    return p;
  };
  switch (app) {
    case Application::seizure:
      return make({{{0.5, 2.0}, {2.0, 6.0}, {6.0, 8.0}, {8.0, 30.0},
                    {30.0, kOpenUpperEdge}}});
    case Application::sleep:
      // (30, 31) is not covered by any band.
      return make({{{0.5, 3.5}, {3.5, 7.5}, {7.5, 12.0}, {12.0, 30.0},
                    {31.0, kOpenUpperEdge}}});
    case Application::stress:
      return make({{{0.0, 3.9}, {4.0, 7.9}, {8.0, 10.0}, {14.0, 29.9},
                    {30.0, 47.0}}});
    case Application::custom:
      break;
  }
  throw DomainError("no built-in profile for a custom application");
}

Application parse_application(std::string_view name) {
  if (name == "seizure") return Application::seizure;
  if (name == "sleep") return Application::sleep;
  if (name == "stress") return Application::stress;
  throw LookupError("unknown profile " + std::string(name));
}

std::string_view application_name(Application app) {
  switch (app) {
    case Application::seizure: return "seizure";
    case Application::sleep: return "sleep";
    case Application::stress: return "stress";
    case Application::custom: return "custom";
  }
  return "custom";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_edge(std::string_view cell, std::size_t row, std::size_t col) {
  if (col == 3 && (cell == "inf" || cell == "nyquist")) return kOpenUpperEdge;
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError("cannot parse band edge '" + std::string(cell) +
                         "' at row " + std::to_string(row) + ", column " +
                         std::to_string(col),
                     row, col);
  }
  return v;
}

}  // namespace

BandProfile parse_profile(std::string_view text) {
  BandProfile p;
  std::size_t count = 0;
  std::size_t row = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++row;
    if (line.empty() || line.front() == '#') continue;

    std::array<std::string_view, 3> cells;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      const auto comma = line.find(',', pos);
      if ((c < 2) == (comma == std::string_view::npos)) {
        throw StructuralError("profile row " + std::to_string(row) +
                              " must be name,low_hz,high_hz");
      }
      cells[c] = trim(line.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos));
      pos = comma + 1;
    }
    if (count == kBandCount) {
      throw StructuralError("profile has more than five bands");
    }
    p.bands[count++] = Band{std::string(cells[0]), parse_edge(cells[1], row, 2),
                            parse_edge(cells[2], row, 3)};
  }
  if (count == 0) throw EmptyInputError("empty profile");
  if (count != kBandCount) {
    throw StructuralError("profile must list exactly five bands, got " +
                          std::to_string(count));
  }
  p.validate();
  return p;
}

BandProfile load_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open profile " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

double band_power(const PsdEstimate& psd, double low_hz, double high_hz) {
  if (!(low_hz >= 0.0) || !(low_hz < high_hz)) {
    throw DomainError("band needs 0 <= low < high");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < psd.bin_power.size(); ++k) {
    const double f = static_cast<double>(k) * psd.bin_width_hz;
    if (f >= low_hz && f < high_hz) sum += psd.bin_power[k];
  }
  return sum * psd.bin_width_hz;
}

}  // namespace eegapprox
