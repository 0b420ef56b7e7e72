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

#include "cspsamle/measurement.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "cspsamle/errors.h"

namespace cspsamle {

MeasurementBasis MeasurementBasis::from_columns(ComplexMatrix columns) {
  if (columns.rows() != columns.cols() || columns.rows() < 2) {
    throw InvalidArgument("basis matrix must be square with dimension >= 2");
  }
  const ComplexMatrix gram = columns.adjoint() * columns;
  const ComplexMatrix eye = ComplexMatrix::Identity(columns.rows(), columns.cols());
  if ((gram - eye).cwiseAbs().maxCoeff() > kOrthonormalityTolerance) {
    throw InvalidArgument("basis columns are not orthonormal");
  }
  return MeasurementBasis(std::move(columns));
}

MeasurementBasis MeasurementBasis::canonical(Eigen::Index dim) {
  return complete_basis(PureState::basis_vector(dim, 0));
}

PureState MeasurementBasis::vector(Eigen::Index i) const {
  return PureState(columns_.col(i));
}

MeasurementBasis complete_basis(const PureState& psi) {
  const ComplexVector& x = psi.amplitudes();
  const Eigen::Index d = x.size();

  // Phase of the pivot; a zero pivot takes phase 1.
  const double pivot_abs = std::abs(x(0));
  const Complex phase = pivot_abs > 0.0 ? x(0) / pivot_abs : Complex(1.0);

  // v = x + phase * e_0 never cancels, and v^H v = 2 (1 + |x_0|) >= 2.
  ComplexVector v = x;
  v(0) += phase;
  const double beta = 2.0 / v.squaredNorm();

  ComplexMatrix columns = ComplexMatrix::Identity(d, d);
  columns.noalias() -= beta * v * v.adjoint();
  columns.col(0) = x;
  return MeasurementBasis(std::move(columns));
}

CountRecord::CountRecord(MeasurementBasis basis, std::vector<std::int64_t> counts)
    : basis_(std::move(basis)), counts_(std::move(counts)), shots_(0) {
  if (static_cast<Eigen::Index>(counts_.size()) != basis_.dim()) {
    throw DimensionMismatch("count vector length " +
                            std::to_string(counts_.size()) +
                            " does not match basis dimension " +
                            std::to_string(basis_.dim()));
  }
  for (std::int64_t n : counts_) {
    if (n < 0) throw InvalidArgument("negative outcome count");
    shots_ += n;
  }
  if (shots_ < 1) throw InvalidArgument("count record has no shots");
}

std::vector<double> outcome_probabilities(const MeasurementBasis& basis,
                                          const PureState& truth) {
  if (basis.dim() != truth.dim()) {
    throw DimensionMismatch("outcome_probabilities: basis dimension " +
                            std::to_string(basis.dim()) + ", state dimension " +
                            std::to_string(truth.dim()));
  }
  const ComplexVector overlaps = basis.columns().adjoint() * truth.amplitudes();
  std::vector<double> p(static_cast<std::size_t>(overlaps.size()));
  for (Eigen::Index i = 0; i < overlaps.size(); ++i) {
    p[static_cast<std::size_t>(i)] = std::norm(overlaps(i));
  }
  return p;
}

std::vector<std::int64_t> simulate_counts(std::span<const double> probabilities,
                                          std::int64_t shots, Rng& rng) {
  if (shots < 1) throw InvalidArgument("shots must be at least 1");
  if (probabilities.empty()) throw InvalidDistribution("empty distribution");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= -1e-12) || !std::isfinite(p)) {
      throw InvalidDistribution("negative or non-finite probability " +
                                std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidDistribution("probabilities sum to " + std::to_string(total));
  }

  std::vector<std::int64_t> counts(probabilities.size(), 0);
  std::int64_t remaining = shots;
  double mass_left = total;
  for (std::size_t i = 0; i + 1 < probabilities.size() && remaining > 0; ++i) {
    const double p = std::max(probabilities[i], 0.0);
    const double conditional = mass_left > 0.0 ? std::clamp(p / mass_left, 0.0, 1.0) : 1.0;
    std::int64_t n = 0;
    if (conditional >= 1.0) {
      n = remaining;
    } else if (conditional > 0.0) {
      std::binomial_distribution<std::int64_t> binom(remaining, conditional);
      n = binom(rng);
    }
    counts[i] = n;
    remaining -= n;
    mass_left -= p;
  }
  counts.back() += remaining;
  return counts;
}

double estimate_infidelity(const CountRecord& record) {
  return 1.0 - static_cast<double>(record.counts()[0]) /
                   static_cast<double>(record.shots());
}

}  // namespace cspsamle
