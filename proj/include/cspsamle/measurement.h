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

#ifndef CSPSAMLE_MEASUREMENT_H
#define CSPSAMLE_MEASUREMENT_H

#include <cstdint>
#include <span>
#include <vector>

#include "cspsamle/states.h"

namespace cspsamle {

/// Tolerance on |<v_i|v_j> - delta_ij| for a measurement basis.
inline constexpr double kOrthonormalityTolerance = 1e-10;

/// An orthonormal basis of C^d stored as the columns of a unitary matrix.
/// Column 0 is the candidate state the basis was built around.
class MeasurementBasis {
 public:
  /// Validates orthonormality of the columns; throws InvalidArgument.
  static MeasurementBasis from_columns(ComplexMatrix columns);

  /// The computational basis {e_0, ..., e_{d-1}}.
  static MeasurementBasis canonical(Eigen::Index dim);

  const ComplexMatrix& columns() const { return columns_; }
  Eigen::Index dim() const { return columns_.cols(); }
  PureState vector(Eigen::Index i) const;

 private:
  explicit MeasurementBasis(ComplexMatrix columns)
      : columns_(std::move(columns)) {}
  friend MeasurementBasis complete_basis(const PureState& psi);

  ComplexMatrix columns_;
};

/// Outcome counts of one projective measurement in `basis`.
class CountRecord {
 public:
  /// Throws InvalidArgument on negative counts, a zero total or a length
  /// that differs from the basis dimension.
  CountRecord(MeasurementBasis basis, std::vector<std::int64_t> counts);

  const MeasurementBasis& basis() const { return basis_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t shots() const { return shots_; }

 private:
  MeasurementBasis basis_;
  std::vector<std::int64_t> counts_;
  std::int64_t shots_;
};

/// Completes psi to an orthonormal basis with psi as column 0.
///
/// Uses the Householder reflection H = I - 2 v v^H / (v^H v) with
/// v = psi + e^{i arg psi_0} e_0, which sends e_0 to -e^{-i arg psi_0} psi.
/// Column 0 is then replaced by psi itself, multiplying it by a phase
/// only. For psi = e_0 the result is the computational basis.
MeasurementBasis complete_basis(const PureState& psi);

/// p_i = |<basis_i|truth>|^2, clamped to be non-negative.
std::vector<double> outcome_probabilities(const MeasurementBasis& basis,
                                          const PureState& truth);

/// Multinomial(shots, probabilities) via sequential conditional binomials.
/// Throws InvalidDistribution when some p_i < -1e-12 or the total is off by
/// more than 1e-9, and InvalidArgument when shots < 1.
std::vector<std::int64_t> simulate_counts(std::span<const double> probabilities,
                                          std::int64_t shots, Rng& rng);

/// 1 - counts_0 / shots.
double estimate_infidelity(const CountRecord& record);

}  // namespace cspsamle

#endif  // CSPSAMLE_MEASUREMENT_H
