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

#include "cspsamle/mle.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cspsamle/errors.h"

namespace cspsamle {

namespace {

constexpr double kArmijoSlope = 1e-4;
constexpr int kMaxBacktracks = 60;

// All records flattened into one linear map psi -> (<v_i|psi>)_i with a
// matching count vector, so that one evaluation is a single mat-vec.
class StackedLikelihood {
 public:
  StackedLikelihood(const AccumulatedData& data, Eigen::Index dim, double floor)
      : floor_(floor) {
    const Eigen::Index rows = static_cast<Eigen::Index>(data.size()) * dim;
    projector_rows_.resize(rows, dim);
    counts_.resize(rows);
    Eigen::Index offset = 0;
    for (const CountRecord& record : data.records()) {
      projector_rows_.middleRows(offset, dim) = record.basis().columns().adjoint();
      for (Eigen::Index i = 0; i < dim; ++i) {
        counts_(offset + i) = static_cast<double>(record.counts()[static_cast<std::size_t>(i)]);
      }
      offset += dim;
    }
  }

  double value(const ComplexVector& psi) const {
    overlaps_.noalias() = projector_rows_ * psi;
    double total = 0.0;
    for (Eigen::Index i = 0; i < overlaps_.size(); ++i) {
      if (counts_(i) == 0.0) continue;
      total += counts_(i) * std::log(std::max(std::norm(overlaps_(i)), floor_));
    }
    return total;
  }

  // Gradient at the point of the most recent value() call.
  ComplexVector gradient_at_last() const {
    weighted_.resize(overlaps_.size());
    for (Eigen::Index i = 0; i < overlaps_.size(); ++i) {
      weighted_(i) = counts_(i) == 0.0
                         ? Complex(0.0)
                         : counts_(i) * overlaps_(i) /
                               std::max(std::norm(overlaps_(i)), floor_);
    }
    return projector_rows_.adjoint() * weighted_;
  }

 private:
  ComplexMatrix projector_rows_;
  Eigen::VectorXd counts_;
  double floor_;
  mutable ComplexVector overlaps_;
  mutable ComplexVector weighted_;
};

void check_dims(const AccumulatedData& data, const PureState& psi) {
  if (!data.empty() && data.dim() != psi.dim()) {
    throw DimensionMismatch("likelihood: data dimension " +
                            std::to_string(data.dim()) + ", state dimension " +
                            std::to_string(psi.dim()));
  }
}

bool small_change(double before, double after, double tol) {
  return std::abs(after - before) <= tol * std::max(std::abs(before), 1.0);
}

}  // namespace

void AccumulatedData::add(CountRecord record) {
  if (!records_.empty() && record.basis().dim() != dim()) {
    throw DimensionMismatch("record dimension differs from accumulated data");
  }
  total_shots_ += record.shots();
  records_.push_back(std::move(record));
}

Eigen::Index AccumulatedData::dim() const {
  return records_.empty() ? 0 : records_.front().basis().dim();
}

void MleConfig::validate() const {
  if (max_inner_iterations < 1) {
    throw InvalidArgument("max_inner_iterations must be at least 1");
  }
  if (!(convergence_tol > 0.0)) {
    throw InvalidArgument("convergence_tol must be positive");
  }
  if (!(probability_floor > 0.0 && probability_floor <= 1e-6)) {
    throw InvalidArgument("probability_floor must lie in (0, 1e-6]");
  }
}

double log_likelihood(const AccumulatedData& data, const PureState& psi,
                      double probability_floor) {
  check_dims(data, psi);
  double total = 0.0;
  for (const CountRecord& record : data.records()) {
    const ComplexVector overlaps =
        record.basis().columns().adjoint() * psi.amplitudes();
    for (Eigen::Index i = 0; i < overlaps.size(); ++i) {
      const auto n = record.counts()[static_cast<std::size_t>(i)];
      if (n == 0) continue;
      total += static_cast<double>(n) *
               std::log(std::max(std::norm(overlaps(i)), probability_floor));
    }
  }
  return total;
}

ComplexVector likelihood_gradient(const AccumulatedData& data,
                                  const PureState& psi,
                                  double probability_floor) {
  check_dims(data, psi);
  ComplexVector grad = ComplexVector::Zero(psi.dim());
  for (const CountRecord& record : data.records()) {
    const ComplexMatrix& basis = record.basis().columns();
    const ComplexVector overlaps = basis.adjoint() * psi.amplitudes();
    for (Eigen::Index i = 0; i < overlaps.size(); ++i) {
      const auto n = record.counts()[static_cast<std::size_t>(i)];
      if (n == 0) continue;
      const double p = std::max(std::norm(overlaps(i)), probability_floor);
      grad += (static_cast<double>(n) / p) * overlaps(i) * basis.col(i);
    }
  }
  return grad;
}

RefineResult refine_traced(const AccumulatedData& data, const PureState& start,
                           const MleConfig& config) {
  config.validate();
  if (data.empty()) throw EmptyData("refine needs at least one count record");
  check_dims(data, start);

  const StackedLikelihood objective(data, start.dim(), config.probability_floor);
  const double initial_step = 1.0 / static_cast<double>(data.total_shots());

  // The cached overlaps always belong to psi: both strategies evaluate the
  // accepted candidate last.
  ComplexVector psi = start.amplitudes();
  double value = objective.value(psi);
  RefineResult result{start, {value}, 0, false};

  for (int it = 0; it < config.max_inner_iterations; ++it) {
    result.iterations = it + 1;
    const ComplexVector grad = objective.gradient_at_last();

    ComplexVector candidate;
    double candidate_value = value;
    bool accepted = false;

    if (config.strategy == MleStrategy::kFixedPoint) {
      const double n = grad.norm();
      if (n > 0.0 && std::isfinite(n)) {
        candidate = grad / n;
        candidate_value = objective.value(candidate);
        accepted = candidate_value > value;
      }
    } else {
      // Remove the radial component; what is left is tangent to the sphere.
      const double radial = psi.dot(grad).real();
      const ComplexVector tangent = grad - radial * psi;
      const double slope = tangent.squaredNorm();
      if (slope > 0.0 && std::isfinite(slope)) {
        double step = initial_step;
        for (int bt = 0; bt < kMaxBacktracks; ++bt, step *= 0.5) {
          candidate = psi + step * tangent;
          candidate.normalize();
          candidate_value = objective.value(candidate);
          if (candidate_value >= value + kArmijoSlope * 2.0 * step * slope &&
              candidate_value > value) {
            accepted = true;
            break;
          }
        }
      }
    }

    if (!accepted) {
      // No numerically measurable ascent left.
      result.converged = true;
      break;
    }

    const double previous = value;
    psi = std::move(candidate);
    value = candidate_value;
    result.log_likelihood_trace.push_back(value);
    if (small_change(previous, value, config.convergence_tol)) {
      result.converged = true;
      break;
    }
  }

  result.state = PureState(std::move(psi));
  return result;
}

PureState refine(const AccumulatedData& data, const PureState& start,
                 const MleConfig& config) {
  return refine_traced(data, start, config).state;
}

}  // namespace cspsamle
