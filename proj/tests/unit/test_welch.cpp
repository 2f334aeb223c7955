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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "eegapprox/errors.hpp"
#include "eegapprox/signal_io.hpp"
#include "eegapprox/welch.hpp"
#include "eegapprox/worker_pool.hpp"
#include "oracles.hpp"

using namespace eegapprox;

namespace {

ApproxConfig cfg_with(std::size_t fft, double overlap, std::size_t stride = 1) {
  ApproxConfig c;
  c.fft_length = fft;
  c.overlap_fraction = overlap;
  c.perforation_stride = stride;
  return c;
}

std::vector<double> random_signal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

}  // namespace

TEST(WelchPsd, ToneLandsInItsBin) {
  const Tone tone{10.0, 1.0};
  const auto rec = synth_signal({&tone, 1}, 4.0, 256.0, 0.0, 1);
  const auto psd = welch_psd(rec.channels()[0].samples, cfg_with(256, 0.5), 256.0);
  EXPECT_DOUBLE_EQ(psd.bin_width_hz, 1.0);
  const auto peak = std::max_element(psd.bin_power.begin(), psd.bin_power.end());
  EXPECT_EQ(peak - psd.bin_power.begin(), 10);
}

TEST(WelchPsd, ZeroSignalGivesZeroPsd) {
  const std::vector<double> zeros(2048, 0.0);
  const auto psd = welch_psd(zeros, cfg_with(1024, 0.5), 256.0);
  for (double p : psd.bin_power) EXPECT_EQ(p, 0.0);
}

TEST(WelchPsd, BinGeometry) {
  const std::vector<double> x(3000, 1.0);
  const auto psd = welch_psd(x, cfg_with(512, 0.3), 100.0);
  EXPECT_EQ(psd.bin_power.size(), 257u);
  EXPECT_NEAR(psd.bin_width_hz * double(psd.bin_power.size() - 1), 50.0, 1e-9);
  EXPECT_NEAR(psd.nyquist_hz(), 50.0, 1e-9);
  EXPECT_EQ(psd.segments_used, num_windows(3000, 512, 0.3));
}

TEST(WelchPsd, ThreeWindowLengthsAtHalfOverlapUseFiveSegments) {
  std::mt19937_64 rng(11);
  const std::size_t w = 256;
  const auto x = random_signal(rng, 3 * w);
  const auto psd = welch_psd(x, cfg_with(w, 0.5), 256.0);
  const auto ref = oracle::welch_by_enumeration(x, w, 0.5, 256.0);
  EXPECT_EQ(psd.segments_used, 5u);
  EXPECT_EQ(ref.segments, 5u);
  EXPECT_LT(oracle::rel_diff(psd.bin_power, ref.bins), 1e-9);
}

TEST(WelchPsd, MatchesEnumerationOracleAcrossOverlaps) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(256, 256 * 6);
  for (int level = 0; level <= 5; ++level) {
    const double o = (5 - level) / 10.0;
    const auto x = random_signal(rng, len(rng));
    const auto psd = welch_psd(x, cfg_with(256, o), 128.0);
    const auto ref = oracle::welch_by_enumeration(x, 256, o, 128.0);
    EXPECT_EQ(psd.segments_used, ref.segments);
    EXPECT_LT(oracle::rel_diff(psd.bin_power, ref.bins), 1e-9) << "o=" << o;
  }
}

TEST(WelchPsd, NonNegativeEverywhere) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_signal(rng, 2000);
    const auto psd = welch_psd(x, cfg_with(512, 0.2, 3), 256.0);
    for (double p : psd.bin_power) EXPECT_GE(p, 0.0);
  }
}

TEST(WelchPsd, PerforationZeroesRawSamplesBeforeWindowing) {
  std::mt19937_64 rng(14);
  auto x = random_signal(rng, 256);
  const auto perforated = welch_psd(x, cfg_with(256, 0.5, 4), 256.0);
  for (std::size_t i = 3; i < x.size(); i += 4) x[i] = 0.0;
  const auto manual = welch_psd(x, cfg_with(256, 0.5, 1), 256.0);
  EXPECT_EQ(perforated.bin_power, manual.bin_power);
}

TEST(WelchPsd, ResultIndependentOfPoolSize) {
  std::mt19937_64 rng(15);
  const auto x = random_signal(rng, 8192);
  const auto serial = welch_psd(x, cfg_with(256, 0.5), 256.0);
  for (std::size_t n : {1u, 2u, 4u}) {
    WorkerPool pool(n);
    const auto parallel = welch_psd(x, cfg_with(256, 0.5), 256.0, &pool);
    EXPECT_EQ(parallel.bin_power, serial.bin_power) << n;
  }
}

TEST(WelchPsd, ShortSignalIsInsufficientData) {
  const std::vector<double> x(1000, 0.0);
  EXPECT_THROW(welch_psd(x, cfg_with(1024, 0.5), 256.0), InsufficientDataError);
  EXPECT_THROW(welch_psd(x, cfg_with(100, 0.5), 256.0), DomainError);
}

TEST(Periodogram, RectangularWindowSatisfiesParseval) {
  std::mt19937_64 rng(16);
  for (std::size_t n = 8; n <= 1024; n <<= 1) {
    const auto x = random_signal(rng, n);
    const std::vector<double> ones(n, 1.0);
    const double fs = 200.0;
    const auto p = periodogram(x, ones, fs);
    double mass = 0.0;
    for (double v : p) mass += v * (fs / double(n));
    double mean_square = 0.0;
    for (double v : x) mean_square += v * v;
    mean_square /= double(n);
    EXPECT_NEAR(mass, mean_square, 1e-9 * mean_square) << n;
  }
}
