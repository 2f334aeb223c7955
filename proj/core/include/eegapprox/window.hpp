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

#include <cstddef>
#include <vector>

namespace eegapprox {

enum class WindowKind { bartlett_hanning };

struct WindowCoefficients {
  std::vector<double> values;
  WindowKind kind = WindowKind::bartlett_hanning;

  std::size_t size() const noexcept { return values.size(); }
  double sum_of_squares() const noexcept;
};

// Symmetric Bartlett-Hanning window:
//   w[n] = 0.62 - 0.48 |n/(L-1) - 1/2| + 0.38 cos(2 pi (n/(L-1) - 1/2)).
// The second half mirrors the first bit-for-bit.
WindowCoefficients bartlett_hanning(std::size_t length);

const WindowCoefficients& cached_bartlett_hanning(std::size_t length);

}  // namespace eegapprox
