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

#include "cspsamle/bounds.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cspsamle/errors.h"

namespace cspsamle {

namespace {

void check_bound_args(std::int64_t dim, std::int64_t total_copies) {
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  if (total_copies < 1) throw InvalidArgument("ensemble size must be at least 1");
}

}  // namespace

double gill_massar_pure(std::int64_t dim, std::int64_t total_copies) {
  check_bound_args(dim, total_copies);
  return static_cast<double>(dim - 1) / static_cast<double>(total_copies);
}

double gill_massar_mixed(std::int64_t dim, std::int64_t total_copies) {
  check_bound_args(dim, total_copies);
  const double half = (static_cast<double>(dim) + 1.0) / 2.0;
  return half * half * gill_massar_pure(dim, total_copies);
}

std::int64_t total_ensemble(std::int64_t n_est, std::int64_t k) {
  if (n_est < 1 || k < 1) throw InvalidArgument("n_est and k must be at least 1");
  return 2 * k * n_est;
}

double sorted_quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw EmptyInput("quantile of an empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize(std::span<const double> samples) {
  if (samples.empty()) throw EmptyInput("cannot summarize an empty sample");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  // Sum in sorted order so the result does not depend on input order.
  const auto n = static_cast<double>(sorted.size());
  double sum = 0.0;
  for (double x : sorted) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : sorted) ss += (x - mean) * (x - mean);

  SummaryStats stats;
  stats.mean = mean;
  stats.variance = sorted.size() > 1 ? ss / (n - 1.0) : 0.0;
  stats.median = sorted_quantile(sorted, 0.5);
  stats.q1 = sorted_quantile(sorted, 0.25);
  stats.q3 = sorted_quantile(sorted, 0.75);
  stats.count = static_cast<std::int64_t>(sorted.size());
  return stats;
}

}  // namespace cspsamle
