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

#ifndef CSPSAMLE_BOUNDS_H
#define CSPSAMLE_BOUNDS_H

#include <cstdint>
#include <span>

namespace cspsamle {

/// Lower bound (d - 1) / N on the mean infidelity of any pure-state
/// estimator using N copies.
double gill_massar_pure(std::int64_t dim, std::int64_t total_copies);

/// ((d + 1) / 2)^2 (d - 1) / N: the best mean infidelity reachable for
/// full-rank mixed-state estimators with separable measurements.
double gill_massar_mixed(std::int64_t dim, std::int64_t total_copies);

/// Copies consumed after k iterations with n_est shots per measurement:
/// 2 k n_est.
std::int64_t total_ensemble(std::int64_t n_est, std::int64_t k);

struct SummaryStats {
  double mean = 0.0;
  /// Unbiased sample variance; 0 for a single sample.
  double variance = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::int64_t count = 0;
};

/// Quantile q in [0, 1] of an ascending-sorted sample, linearly interpolated
/// between order statistics at position q (n - 1).
double sorted_quantile(std::span<const double> sorted, double q);

/// Throws EmptyInput on an empty sample.
SummaryStats summarize(std::span<const double> samples);

}  // namespace cspsamle

#endif  // CSPSAMLE_BOUNDS_H
