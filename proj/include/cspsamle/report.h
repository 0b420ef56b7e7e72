// Copyright 2026 The cspsamle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSPSAMLE_REPORT_H
#define CSPSAMLE_REPORT_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cspsamle/harness.h"

namespace cspsamle {

/// Pooled-row header. Per-state output appends a trailing `state_id`
/// column, which holds `pooled` on the pooled rows.
inline constexpr std::string_view kReportHeader =
    "d,n_est,mode,k,n_total,mean,variance,median,q1,q3,gm_pure,gm_mixed";

/// One CSV line.
struct ReportRow {
  std::int64_t d = 0;
  std::int64_t n_est = 0;
  Mode mode = Mode::kCspsaMle;
  std::int64_t k = 0;
  std::int64_t n_total = 0;
  double mean = 0.0;
  double variance = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double gm_pure = 0.0;
  double gm_mixed = 0.0;
  /// Empty for pooled rows.
  std::optional<std::int64_t> state_id;

  bool operator==(const ReportRow&) const = default;
};

/// 17 significant digits, locale independent.
std::string format_real(double value);

/// Pooled rows for k = 1..k_max, followed by per-state rows when
/// report.config.per_state is set.
std::vector<ReportRow> report_rows(const AggregateReport& report);

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows,
                bool with_state_column);

/// Writes the report as CSV. Throws IoFailure.
void write_report(const AggregateReport& report, const std::string& path);

/// Parses a file produced by write_report. Throws IoFailure on open
/// errors and InvalidArgument on malformed content.
std::vector<ReportRow> read_report(const std::string& path);

}  // namespace cspsamle

#endif  // CSPSAMLE_REPORT_H
