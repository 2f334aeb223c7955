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

#include "eegapprox/fft.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <unordered_map>

#include "eegapprox/errors.hpp"

namespace eegapprox {

FftPlan::FftPlan(std::size_t size) : size_(size) {
  if (!is_power_of_two(size)) {
    throw DomainError("fft length must be a power of two, got " +
                      std::to_string(size));
  }
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < size) ++bits;

  bit_reverse_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (unsigned b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }

  // Each twiddle is evaluated directly; a running product would accumulate
  // rounding error across the table.
  twiddles_.resize(size / 2);
  for (std::size_t k = 0; k < size / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(size);
    twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
  }
}

void FftPlan::transform(std::span<Complex> data, bool inverse) const {
  if (data.size() != size_) {
    throw DomainError("buffer length " + std::to_string(data.size()) +
                      " does not match plan size " + std::to_string(size_));
  }
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * step];
        if (inverse) w = std::conj(w);
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(size_);
    for (auto& x : data) x *= scale;
  }
}

const FftPlan& cached_fft_plan(std::size_t size) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[size];
  if (!slot) slot = std::make_unique<FftPlan>(size);
  return *slot;
}

std::vector<Complex> fft(std::span<const Complex> buffer, bool inverse) {
  std::vector<Complex> out(buffer.begin(), buffer.end());
  cached_fft_plan(out.size()).transform(out, inverse);
  return out;
}

}  // namespace eegapprox
