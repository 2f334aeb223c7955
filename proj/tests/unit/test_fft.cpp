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

#include <random>

#include "eegapprox/errors.hpp"
#include "eegapprox/fft.hpp"
#include "oracles.hpp"

using namespace eegapprox;

TEST(Fft, ImpulseGivesFlatSpectrum) {
  const std::vector<Complex> x{1, 0, 0, 0};
  const auto y = fft(x);
  for (const auto& v : y) {
    EXPECT_NEAR(v.real(), 1.0, 1e-15);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
}

TEST(Fft, ConstantConcentratesInDc) {
  const std::vector<Complex> x{1, 1, 1, 1};
  const auto y = fft(x);
  EXPECT_NEAR(std::abs(y[0] - Complex(4, 0)), 0.0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(y[k]), 0.0, 1e-15);
}

TEST(Fft, LengthOneIsIdentity) {
  const std::vector<Complex> x{Complex(2.5, -1)};
  EXPECT_EQ(fft(x), x);
}

TEST(Fft, RejectsNonPowerOfTwo) {
  const std::vector<Complex> x(6);
  EXPECT_THROW(fft(x), DomainError);
  EXPECT_THROW(FftPlan(0), DomainError);
}

TEST(Fft, MatchesNaiveDftOnRandomInputs) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n = 1; n <= 256; n <<= 1) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Complex> x(n);
      for (auto& v : x) v = Complex(u(rng), u(rng));
      EXPECT_LT(oracle::max_abs_diff(fft(x), oracle::naive_dft(x)), 1e-9) << n;
      EXPECT_LT(oracle::max_abs_diff(fft(x, true), oracle::naive_dft(x, true)), 1e-9) << n;
    }
  }
}

TEST(Fft, RoundTripIsIdentityUpTo4096) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  for (std::size_t n = 2; n <= 4096; n <<= 1) {
    std::vector<Complex> x(n);
    double scale = 0.0;
    for (auto& v : x) {
      v = Complex(g(rng), g(rng));
      scale = std::max(scale, std::abs(v));
    }
    const auto back = fft(fft(x), true);
    EXPECT_LT(oracle::max_abs_diff(back, x) / scale, 1e-9) << n;
  }
}

TEST(Fft, ParsevalHolds) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::size_t n = 8; n <= 1024; n <<= 1) {
    std::vector<Complex> x(n);
    for (auto& v : x) v = Complex(u(rng), 0.0);
    const auto y = fft(x);
    double time = 0.0, freq = 0.0;
    for (const auto& v : x) time += std::norm(v);
    for (const auto& v : y) freq += std::norm(v);
    EXPECT_NEAR(time, freq / double(n), 1e-9 * time);
  }
}

TEST(FftPlan, ReusableAcrossCalls) {
  FftPlan plan(16);
  std::vector<Complex> a(16, Complex(1, 0));
  plan.transform(a, false);
  plan.transform(a, true);
  for (const auto& v : a) EXPECT_NEAR(std::abs(v - Complex(1, 0)), 0.0, 1e-14);
  std::vector<Complex> wrong(8);
  EXPECT_THROW(plan.transform(wrong, false), DomainError);
}
