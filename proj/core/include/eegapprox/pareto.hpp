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

#include <span>
#include <vector>

#include "eegapprox/sweep.hpp"

namespace eegapprox {

// Weak Pareto dominance on (power down, performance up, accuracy up).
bool dominates(const SweepRecord& a, const SweepRecord& b) noexcept;

// Indices of the non-dominated records, ascending.
std::vector<std::size_t> pareto_indices(std::span<const SweepRecord> records);

// Non-dominated records in input order. Duplicates all survive.
std::vector<SweepRecord> pareto_front(std::span<const SweepRecord> records);

}  // namespace eegapprox
