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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace eegapprox {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

// Precomputed bit-reversal permutation and twiddles for one radix-2 size.
class FftPlan {
 public:
  explicit FftPlan(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  // In-place iterative Cooley-Tukey. Forward: X[k] = sum x[n] e^{-2 pi i nk/N};
  // inverse applies the conjugate kernel and 1/N scaling.
  void transform(std::span<Complex> data, bool inverse) const;

 private:
  std::size_t size_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddles_;  // e^{-2 pi i k/N}, k < N/2
};

// Per-thread cached plan for `size`.
const FftPlan& cached_fft_plan(std::size_t size);

std::vector<Complex> fft(std::span<const Complex> buffer, bool inverse = false);

}  // namespace eegapprox
