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

#include "cspsamle/report.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "cspsamle/errors.h"

namespace cspsamle {

namespace {

constexpr std::string_view kStateColumn = "state_id";
constexpr std::string_view kPooledTag = "pooled";

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InvalidArgument("malformed CSV field '" + std::string(field) + "'");
  }
  return value;
}

ReportRow make_row(const AggregateReport& report, std::size_t k,
                   const SummaryStats& stats) {
  ReportRow row;
  row.d = report.config.dim;
  row.n_est = report.config.n_est;
  row.mode = report.config.mode;
  row.k = static_cast<std::int64_t>(k + 1);
  row.n_total = report.total_copies[k];
  row.mean = stats.mean;
  row.variance = stats.variance;
  row.median = stats.median;
  row.q1 = stats.q1;
  row.q3 = stats.q3;
  row.gm_pure = report.gm_pure[k];
  row.gm_mixed = report.gm_mixed[k];
  return row;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw InvalidArgument("cannot format value");
  return std::string(buf, ptr);
}

std::vector<ReportRow> report_rows(const AggregateReport& report) {
  std::vector<ReportRow> rows;
  for (std::size_t k = 0; k < report.pooled.size(); ++k) {
    rows.push_back(make_row(report, k, report.pooled[k]));
  }
  if (report.config.per_state) {
    for (std::size_t s = 0; s < report.per_state.size(); ++s) {
      for (std::size_t k = 0; k < report.per_state[s].size(); ++k) {
        ReportRow row = make_row(report, k, report.per_state[s][k]);
        row.state_id = static_cast<std::int64_t>(s);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows,
                bool with_state_column) {
  out << kReportHeader;
  if (with_state_column) out << ',' << kStateColumn;
  out << '\n';
  for (const ReportRow& r : rows) {
    out << r.d << ',' << r.n_est << ',' << mode_name(r.mode) << ',' << r.k << ','
        << r.n_total << ',' << format_real(r.mean) << ',' << format_real(r.variance)
        << ',' << format_real(r.median) << ',' << format_real(r.q1) << ','
        << format_real(r.q3) << ',' << format_real(r.gm_pure) << ','
        << format_real(r.gm_mixed);
    if (with_state_column) {
      out << ',';
      if (r.state_id) {
        out << *r.state_id;
      } else {
        out << kPooledTag;
      }
    }
    out << '\n';
  }
}

void write_report(const AggregateReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  write_rows(out, report_rows(report), report.config.per_state);
  out.flush();
  if (!out) throw IoFailure("write to '" + path + "' failed");
}

std::vector<ReportRow> read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "' for reading");

  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("report has no header");
  bool with_state = false;
  if (line == kReportHeader) {
    with_state = false;
  } else if (line == std::string(kReportHeader) + "," + std::string(kStateColumn)) {
    with_state = true;
  } else {
    throw InvalidArgument("unexpected report header '" + line + "'");
  }
  const std::size_t expected = with_state ? 13 : 12;

  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string_view> f = split_csv(line);
    if (f.size() != expected) throw InvalidArgument("wrong field count in report row");
    ReportRow r;
    r.d = parse_number<std::int64_t>(f[0]);
    r.n_est = parse_number<std::int64_t>(f[1]);
    r.mode = parse_mode(f[2]);
    r.k = parse_number<std::int64_t>(f[3]);
    r.n_total = parse_number<std::int64_t>(f[4]);
    r.mean = parse_number<double>(f[5]);
    r.variance = parse_number<double>(f[6]);
    r.median = parse_number<double>(f[7]);
    r.q1 = parse_number<double>(f[8]);
    r.q3 = parse_number<double>(f[9]);
    r.gm_pure = parse_number<double>(f[10]);
    r.gm_mixed = parse_number<double>(f[11]);
    if (with_state && f[12] != kPooledTag) r.state_id = parse_number<std::int64_t>(f[12]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cspsamle
