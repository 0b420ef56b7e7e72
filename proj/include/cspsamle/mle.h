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

#ifndef CSPSAMLE_MLE_H
#define CSPSAMLE_MLE_H

#include <cstdint>
#include <vector>

#include "cspsamle/measurement.h"
#include "cspsamle/states.h"

namespace cspsamle {

/// Every measurement record gathered so far, in acquisition order.
class AccumulatedData {
 public:
  AccumulatedData() = default;

  /// Throws DimensionMismatch if the record's dimension differs from the
  /// records already held.
  void add(CountRecord record);

  const std::vector<CountRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  std::int64_t total_shots() const { return total_shots_; }
  /// Dimension of the held records, 0 when empty.
  Eigen::Index dim() const;

 private:
  std::vector<CountRecord> records_;
  std::int64_t total_shots_ = 0;
};

enum class MleStrategy {
  /// Tangent-projected Wirtinger gradient ascent on the unit sphere with
  /// Armijo backtracking. Monotone.
  kGradientAscent,
  /// psi <- R psi / ||R psi|| with R = sum_i n_i / p_i |v_i><v_i|. A step
  /// that fails to increase the likelihood ends the iteration.
  kFixedPoint,
};

struct MleConfig {
  int max_inner_iterations = 500;
  /// Stop once |L_new - L_old| <= convergence_tol * max(|L_old|, 1).
  double convergence_tol = 1e-10;
  /// Floor applied to outcome probabilities inside logs and denominators.
  double probability_floor = 1e-12;
  MleStrategy strategy = MleStrategy::kGradientAscent;

  /// Throws InvalidArgument unless max_inner_iterations >= 1,
  /// convergence_tol > 0 and probability_floor in (0, 1e-6].
  void validate() const;
};

/// sum_records sum_i n_i log max(|<v_i|psi>|^2, floor); multinomial
/// coefficients are dropped. Throws DimensionMismatch.
double log_likelihood(const AccumulatedData& data, const PureState& psi,
                      double probability_floor = 1e-12);

/// Wirtinger gradient dL/dpsi^* = sum n_i <v_i|psi> |v_i> / max(p_i, floor),
/// taken with psi unconstrained.
ComplexVector likelihood_gradient(const AccumulatedData& data,
                                  const PureState& psi,
                                  double probability_floor = 1e-12);

struct RefineResult {
  PureState state;
  /// Log-likelihood at the start and after every accepted step.
  std::vector<double> log_likelihood_trace;
  int iterations = 0;
  bool converged = false;
};

/// Pure-state maximum-likelihood refinement warm-started at `start`.
/// Throws EmptyData when `data` holds no records.
RefineResult refine_traced(const AccumulatedData& data, const PureState& start,
                           const MleConfig& config = {});

PureState refine(const AccumulatedData& data, const PureState& start,
                 const MleConfig& config = {});

}  // namespace cspsamle

#endif  // CSPSAMLE_MLE_H
