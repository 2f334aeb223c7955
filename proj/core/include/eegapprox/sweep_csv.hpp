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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eegapprox/sweep.hpp"

namespace eegapprox {

inline constexpr std::string_view kSweepCsvHeader =
    "cluster,cores,freq_mhz,level,power_w,perf_hb_s,accuracy,windows_processed";

std::string format_sweep_row(const SweepRecord& r);

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

// A parsed sweep file that remembers each row's original text so filtered
// output can be written back byte-for-byte.
struct SweepTable {
  std::vector<SweepRecord> records;
  std::vector<std::string> lines;
};

// Throws StructuralError on a bad header or column count and ParseError on a
// malformed cell.
SweepTable parse_sweep_csv(std::string_view text);

}  // namespace eegapprox
