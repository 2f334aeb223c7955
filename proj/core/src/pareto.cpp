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

#include "eegapprox/pareto.hpp"

#include <algorithm>
#include <numeric>

#include "eegapprox/errors.hpp"

namespace eegapprox {

bool dominates(const SweepRecord& a, const SweepRecord& b) noexcept {
  const bool no_worse = a.power_w <= b.power_w && a.perf_hb_s >= b.perf_hb_s &&
                        a.accuracy >= b.accuracy;
  const bool better = a.power_w < b.power_w || a.perf_hb_s > b.perf_hb_s ||
                      a.accuracy > b.accuracy;
  return no_worse && better;
}

std::vector<std::size_t> pareto_indices(std::span<const SweepRecord> records) {
  if (records.empty()) throw DomainError("pareto front of an empty set");

  // Sorted by (power asc, perf desc, accuracy desc), any dominator of a record
  // precedes it, and by transitivity some front member dominates every
  // dominated record. Each record therefore only needs checking against the
  // front built so far.
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& a = records[i];
    const auto& b = records[j];
    if (a.power_w != b.power_w) return a.power_w < b.power_w;
    if (a.perf_hb_s != b.perf_hb_s) return a.perf_hb_s > b.perf_hb_s;
    return a.accuracy > b.accuracy;
  });

  std::vector<std::size_t> front;
  for (std::size_t idx : order) {
    const auto& candidate = records[idx];
    const bool dominated =
        std::any_of(front.begin(), front.end(), [&](std::size_t f) {
          return dominates(records[f], candidate);
        });
    if (!dominated) front.push_back(idx);
  }
  std::sort(front.begin(), front.end());
  return front;
}

std::vector<SweepRecord> pareto_front(std::span<const SweepRecord> records) {
  std::vector<SweepRecord> out;
  for (std::size_t i : pareto_indices(records)) out.push_back(records[i]);
  return out;
}

}  // namespace eegapprox
