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

#include "cspsamle/states.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cspsamle/errors.h"

namespace cspsamle {

namespace {

void require_dim(Eigen::Index dim) {
  if (dim < 2) {
    throw InvalidArgument("state dimension must be at least 2, got " +
                          std::to_string(dim));
  }
}

}  // namespace

RawAmplitudes::RawAmplitudes(ComplexVector entries)
    : entries_(std::move(entries)) {
  require_dim(entries_.size());
  if (!(entries_.squaredNorm() > 0.0)) {
    throw ZeroVector("amplitude vector is identically zero");
  }
}

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  require_dim(amplitudes_.size());
  const double n2 = amplitudes_.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw InvalidArgument("state is not unit norm (squared norm " +
                          std::to_string(n2) + ")");
  }
}

PureState PureState::basis_vector(Eigen::Index dim, Eigen::Index index) {
  require_dim(dim);
  if (index < 0 || index >= dim) {
    throw InvalidArgument("basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

PureState normalize(const ComplexVector& raw) {
  require_dim(raw.size());
  const double norm = raw.norm();
  if (!(norm > 1e-300) || !std::isfinite(norm)) {
    throw ZeroVector("cannot normalize a vector of norm " +
                     std::to_string(norm));
  }
  return PureState(raw / norm);
}

PureState normalize(const RawAmplitudes& raw) { return normalize(raw.entries()); }

double fidelity(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("fidelity: dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  const double f = std::norm(a.amplitudes().dot(b.amplitudes()));
  return std::clamp(f, 0.0, 1.0);
}

double infidelity(const PureState& a, const PureState& b) {
  return 1.0 - fidelity(a, b);
}

double raw_infidelity(const RawAmplitudes& estimate,
                      const RawAmplitudes& truth) {
  if (estimate.dim() != truth.dim()) {
    throw DimensionMismatch("raw_infidelity: dimension mismatch");
  }
  // Eigen's dot conjugates its left operand: truth^H estimate = estimate . truth^*.
  const double overlap = std::norm(truth.entries().dot(estimate.entries()));
  return 1.0 - overlap / (estimate.squared_norm() * truth.squared_norm());
}

PureState haar_random_state(Eigen::Index dim, Rng& rng) {
  require_dim(dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector z(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z(i) = Complex(re, im);
  }
  return normalize(z);
}

}  // namespace cspsamle
