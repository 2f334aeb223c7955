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

#include "eegapprox/power_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "eegapprox/errors.hpp"

namespace eegapprox {

std::string_view cluster_name(Cluster c) {
  return c == Cluster::big ? "big" : "LITTLE";
}

Cluster parse_cluster(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "big") return Cluster::big;
  if (lower == "little") return Cluster::little;
  throw LookupError("unknown cluster " + std::string(name));
}

void PlatformConfig::validate() const {
  if (cores < 1 || cores > kMaxCores) {
    throw DomainError("cores must be in 1..4, got " + std::to_string(cores));
  }
  if (std::find(kFrequenciesMhz.begin(), kFrequenciesMhz.end(), freq_mhz) ==
      kFrequenciesMhz.end()) {
    throw DomainError("frequency must be 600, 1000 or 1400 MHz, got " +
                      std::to_string(freq_mhz));
  }
}

std::vector<PlatformConfig> full_platform_grid() {
  std::vector<PlatformConfig> grid;
  for (Cluster c : kClusters) {
    for (int cores = 1; cores <= kMaxCores; ++cores) {
      for (int f : kFrequenciesMhz) grid.push_back({c, cores, f});
    }
  }
  return grid;
}

void PowerModelParams::validate() const {
  for (const auto* cp : {&little, &big}) {
    if (!(cp->static_w >= 0.0) || !(cp->dyn_coeff_w > 0.0)) {
      throw DomainError("power model needs static_w >= 0 and dyn_coeff > 0");
    }
  }
  if (!(big.dyn_coeff_w > little.dyn_coeff_w)) {
    throw DomainError("big dynamic coefficient must exceed LITTLE's");
  }
}

namespace {

double load_factor(const PlatformConfig& p) {
  const double ghz = static_cast<double>(p.freq_mhz) / 1000.0;
  return static_cast<double>(p.cores) * ghz * ghz * ghz;
}

}  // namespace

double model_power(const PowerModelParams& params, const PlatformConfig& p) {
  p.validate();
  const auto& cp = params.of(p.cluster);
  return cp.static_w + cp.dyn_coeff_w * load_factor(p);
}

namespace {

struct Fit {
  ClusterPower power;
  double rms_residual_w = 0.0;
};

Fit fit_cluster(std::span<const PowerAnchor> anchors, Cluster cluster) {
  std::vector<std::pair<double, double>> pts;
  std::set<int> freqs;
  for (const auto& a : anchors) {
    if (a.platform.cluster != cluster) continue;
    a.platform.validate();
    pts.emplace_back(load_factor(a.platform), a.watts);
    freqs.insert(a.platform.freq_mhz);
  }
  if (pts.size() < 2 || freqs.size() < 2) {
    throw DomainError("calibration for the " + std::string(cluster_name(cluster)) +
                      " cluster is underdetermined: need anchors at two or "
                      "more distinct frequencies");
  }
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  Fit fit;
  fit.power.dyn_coeff_w = sxy / sxx;
  fit.power.static_w = my - fit.power.dyn_coeff_w * mx;
  if (!(fit.power.dyn_coeff_w > 0.0) || !(fit.power.static_w >= 0.0)) {
    throw DomainError("calibration for the " + std::string(cluster_name(cluster)) +
                      " cluster gives a non-physical fit (negative static power "
                      "or non-increasing dynamic power)");
  }
  double ss = 0.0;
  for (auto [x, y] : pts) {
    const double r = y - (fit.power.static_w + fit.power.dyn_coeff_w * x);
    ss += r * r;
  }
  fit.rms_residual_w = std::sqrt(ss / n);
  return fit;
}

}  // namespace

Calibration calibrate_power(std::span<const PowerAnchor> anchors) {
  const auto little = fit_cluster(anchors, Cluster::little);
  const auto big = fit_cluster(anchors, Cluster::big);
  Calibration cal;
  cal.params.little = little.power;
  cal.params.big = big.power;
  cal.little_rms_residual_w = little.rms_residual_w;
  cal.big_rms_residual_w = big.rms_residual_w;
  cal.params.validate();
  return cal;
}

ClusterPower calibrate_dynamic(std::span<const PowerAnchor> anchors,
                               Cluster cluster, double static_w) {
  if (!(static_w >= 0.0)) throw DomainError("static power must be >= 0");
  // Least squares through (0, static_w): c = sum x (y - s) / sum x^2.
  double sxy = 0.0, sxx = 0.0;
  for (const auto& a : anchors) {
    if (a.platform.cluster != cluster) continue;
    a.platform.validate();
    const double x = load_factor(a.platform);
    sxy += x * (a.watts - static_w);
    sxx += x * x;
  }
  if (sxx == 0.0) {
    throw DomainError("no anchors for the " + std::string(cluster_name(cluster)) +
                      " cluster");
  }
  const double c = sxy / sxx;
  if (!(c > 0.0)) throw DomainError("non-positive dynamic coefficient");
  return ClusterPower{static_w, c};
}

std::vector<PowerAnchor> default_power_anchors() {
  return {
      {{Cluster::big, 4, 600}, 1.1},
      {{Cluster::big, 4, 1400}, 3.0},
      {{Cluster::little, 4, 600}, 0.2},
      {{Cluster::little, 4, 1400}, 0.6},
  };
}

std::vector<PowerAnchor> parse_power_anchors(std::string_view text) {
  std::vector<PowerAnchor> out;
  std::size_t row = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    start = nl + 1;
    ++row;
    line.erase(std::remove_if(line.begin(), line.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               line.end());
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "cluster,cores,freq_mhz,watts") {
        throw StructuralError(
            "calibration header must be cluster,cores,freq_mhz,watts");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 4) {
      throw StructuralError("calibration row " + std::to_string(row) +
                            " must have 4 columns");
    }
    PowerAnchor a;
    a.platform.cluster = parse_cluster(cells[0]);
    auto parse = [&](const std::string& cell, auto& v, std::size_t col) {
      const auto* end = cell.data() + cell.size();
      const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
      if (cell.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("cannot parse '" + cell + "' at row " +
                             std::to_string(row) + ", column " +
                             std::to_string(col),
                         row, col);
      }
    };
    parse(cells[1], a.platform.cores, 2);
    parse(cells[2], a.platform.freq_mhz, 3);
    parse(cells[3], a.watts, 4);
    a.platform.validate();
    out.push_back(a);
  }
  if (!header_seen) throw EmptyInputError("empty calibration file");
  return out;
}

}  // namespace eegapprox
