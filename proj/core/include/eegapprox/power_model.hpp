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
#include <span>
#include <string_view>
#include <vector>

namespace eegapprox {

enum class Cluster { little, big };

inline constexpr std::array<Cluster, 2> kClusters = {Cluster::little,
                                                     Cluster::big};
inline constexpr std::array<int, 3> kFrequenciesMhz = {600, 1000, 1400};
inline constexpr int kMaxCores = 4;

// "LITTLE" / "big" (case-insensitive on input).
std::string_view cluster_name(Cluster c);
Cluster parse_cluster(std::string_view name);

struct PlatformConfig {
  Cluster cluster = Cluster::big;
  int cores = 1;
  int freq_mhz = 1400;

  void validate() const;
  bool operator==(const PlatformConfig&) const = default;
};

// The 2 x 4 x 3 platform grid, cluster-major, then cores, then frequency.
std::vector<PlatformConfig> full_platform_grid();

struct ClusterPower {
  double static_w = 0.0;
  double dyn_coeff_w = 0.0;  // per core, multiplies (freq / 1 GHz)^3
};

struct PowerModelParams {
  ClusterPower little;
  ClusterPower big;

  const ClusterPower& of(Cluster c) const noexcept {
    return c == Cluster::big ? big : little;
  }
  ClusterPower& of(Cluster c) noexcept {
    return c == Cluster::big ? big : little;
  }
  void validate() const;
};

// static_w + cores * dyn_coeff * (freq_mhz / 1000)^3. Independent of the
// approximation level.
double model_power(const PowerModelParams& params, const PlatformConfig& p);

struct PowerAnchor {
  PlatformConfig platform;
  double watts = 0.0;
};

struct Calibration {
  PowerModelParams params;
  // Root-mean-square residual of the fit, per cluster, in watts.
  double little_rms_residual_w = 0.0;
  double big_rms_residual_w = 0.0;
};

// Per-cluster least-squares fit of (static_w, dyn_coeff). Needs anchors at
// two or more distinct frequencies for each cluster.
Calibration calibrate_power(std::span<const PowerAnchor> anchors);

// One-parameter fit of dyn_coeff for a single cluster with static_w held at
// `static_w`. Needs at least one anchor for that cluster.
ClusterPower calibrate_dynamic(std::span<const PowerAnchor> anchors,
                               Cluster cluster, double static_w);

// Big anchors are the two published readings (4 cores: 1.1 W at 600 MHz,
// 3.0 W at 1400 MHz). LITTLE has no published reading; its anchors are
// placeholder values chosen below every big configuration.
std::vector<PowerAnchor> default_power_anchors();

// `cluster,cores,freq_mhz,watts` with a header row.
std::vector<PowerAnchor> parse_power_anchors(std::string_view text);

}  // namespace eegapprox
