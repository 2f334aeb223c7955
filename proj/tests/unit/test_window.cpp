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

#include "eegapprox/errors.hpp"
#include "eegapprox/window.hpp"
#include "oracles.hpp"

using namespace eegapprox;

TEST(BartlettHanning, EndpointsAreZero) {
  const auto w = bartlett_hanning(4);
  EXPECT_NEAR(w.values.front(), 0.0, 1e-15);
  EXPECT_NEAR(w.values.back(), 0.0, 1e-15);
}

TEST(BartlettHanning, SymmetricAndBounded) {
  for (std::size_t len = 2; len <= 4096; len <<= 1) {
    const auto w = bartlett_hanning(len);
    ASSERT_EQ(w.size(), len);
    for (std::size_t i = 0; i < len; ++i) {
      EXPECT_GE(w.values[i], 0.0);
      EXPECT_LE(w.values[i], 1.0);
      EXPECT_NEAR(w.values[i], w.values[len - 1 - i], 1e-12);
    }
  }
  const auto w8 = bartlett_hanning(8);
  EXPECT_EQ(w8.values[1], w8.values[6]);
}

TEST(BartlettHanning, MidpointPairIsMaximal) {
  for (std::size_t len : {4u, 64u, 1024u}) {
    const auto w = bartlett_hanning(len);
    const double peak = *std::max_element(w.values.begin(), w.values.end());
    EXPECT_EQ(w.values[len / 2 - 1], peak);
    EXPECT_EQ(w.values[len / 2], peak);
    EXPECT_LE(peak, 1.0);
  }
}

TEST(BartlettHanning, MatchesPointwiseDefinition) {
  const auto w = bartlett_hanning(256);
  for (std::size_t n = 1; n + 1 < 256; ++n) {
    EXPECT_NEAR(w.values[n], oracle::bartlett_hanning_at(n, 256), 1e-12);
  }
}

TEST(BartlettHanning, RejectsBadLengths) {
  EXPECT_THROW(bartlett_hanning(1), DomainError);
  EXPECT_THROW(bartlett_hanning(0), DomainError);
  EXPECT_THROW(bartlett_hanning(12), DomainError);
}
