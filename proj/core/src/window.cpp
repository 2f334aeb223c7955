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

#include "eegapprox/window.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <unordered_map>

#include "eegapprox/errors.hpp"
#include "eegapprox/fft.hpp"

namespace eegapprox {

double WindowCoefficients::sum_of_squares() const noexcept {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

WindowCoefficients bartlett_hanning(std::size_t length) {
  if (length < 2 || !is_power_of_two(length)) {
    throw DomainError("window length must be a power of two >= 2, got " +
                      std::to_string(length));
  }
  WindowCoefficients w;
  w.values.resize(length);
  const double denom = static_cast<double>(length - 1);
  for (std::size_t n = 0; n < (length + 1) / 2; ++n) {
    const double x = static_cast<double>(n) / denom - 0.5;
    const double v = 0.62 - 0.48 * std::abs(x) +
                     0.38 * std::cos(2.0 * std::numbers::pi * x);
    // Endpoints evaluate to a rounding-level residue around zero.
    w.values[n] = std::clamp(v, 0.0, 1.0);
    w.values[length - 1 - n] = w.values[n];
  }
  return w;
}

const WindowCoefficients& cached_bartlett_hanning(std::size_t length) {
  thread_local std::unordered_map<std::size_t,
                                  std::unique_ptr<WindowCoefficients>>
      cache;
  auto& slot = cache[length];
  if (!slot) slot = std::make_unique<WindowCoefficients>(bartlett_hanning(length));
  return *slot;
}

}  // namespace eegapprox
