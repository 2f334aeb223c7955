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

#include "eegapprox/sweep_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "eegapprox/errors.hpp"

namespace eegapprox {

namespace {

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_sweep_row(const SweepRecord& r) {
  std::string row;
  row += cluster_name(r.platform.cluster);
  row += ',' + std::to_string(r.platform.cores);
  row += ',' + std::to_string(r.platform.freq_mhz);
  row += ',' + std::to_string(r.level);
  row += ',' + fmt_real(r.power_w);
  row += ',' + fmt_real(r.perf_hb_s);
  row += ',' + fmt_real(r.accuracy);
  row += ',' + std::to_string(r.windows_processed);
  return row;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) out << format_sweep_row(r) << '\n';
}

SweepTable parse_sweep_csv(std::string_view text) {
  SweepTable table;
  std::size_t start = 0;
  std::size_t row = 0;
  bool header_seen = false;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = strip_cr(text.substr(start, nl - start));
    start = nl + 1;
    ++row;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kSweepCsvHeader) {
        throw StructuralError("sweep header must be " +
                              std::string(kSweepCsvHeader));
      }
      header_seen = true;
      continue;
    }

    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 8) {
      throw StructuralError("sweep row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " columns, expected 8");
    }
    auto parse = [&](std::size_t col, auto& v) {
      const auto cell = cells[col];
      const auto* end = cell.data() + cell.size();
      const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
      if (cell.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("cannot parse '" + std::string(cell) + "' at row " +
                             std::to_string(row) + ", column " +
                             std::to_string(col + 1),
                         row, col + 1);
      }
    };
    SweepRecord r;
    try {
      r.platform.cluster = parse_cluster(cells[0]);
    } catch (const LookupError& e) {
      throw ParseError(std::string(e.what()) + " at row " + std::to_string(row) +
                           ", column 1",
                       row, 1);
    }
    parse(1, r.platform.cores);
    parse(2, r.platform.freq_mhz);
    parse(3, r.level);
    parse(4, r.power_w);
    parse(5, r.perf_hb_s);
    parse(6, r.accuracy);
    parse(7, r.windows_processed);
    if (!std::isfinite(r.power_w) || !std::isfinite(r.perf_hb_s) ||
        !std::isfinite(r.accuracy)) {
      throw ParseError("non-finite value in sweep row " + std::to_string(row),
                       row, 5);
    }
    table.records.push_back(r);
    table.lines.emplace_back(line);
  }
  if (!header_seen) throw EmptyInputError("empty sweep file");
  return table;
}

}  // namespace eegapprox
