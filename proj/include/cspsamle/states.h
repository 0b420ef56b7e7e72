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

#ifndef CSPSAMLE_STATES_H
#define CSPSAMLE_STATES_H

#include <complex>

#include <Eigen/Dense>

#include "cspsamle/random.h"

namespace cspsamle {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Tolerance on | ||psi||^2 - 1 | for a PureState.
inline constexpr double kNormTolerance = 1e-12;

/// An unnormalized complex coordinate vector, as iterated by the optimizer.
/// Dimension is at least 2 and the vector is never identically zero.
class RawAmplitudes {
 public:
  explicit RawAmplitudes(ComplexVector entries);

  const ComplexVector& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.size(); }
  double squared_norm() const { return entries_.squaredNorm(); }

 private:
  ComplexVector entries_;
};

/// A unit-norm state vector. Global phase is kept as given.
class PureState {
 public:
  /// Wraps an already-normalized vector; throws InvalidArgument if the norm
  /// is off by more than kNormTolerance.
  explicit PureState(ComplexVector amplitudes);

  /// The canonical basis vector e_index.
  static PureState basis_vector(Eigen::Index dim, Eigen::Index index);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  /// The same state as an optimizer iterate.
  RawAmplitudes raw() const { return RawAmplitudes(amplitudes_); }

 private:
  ComplexVector amplitudes_;
};

/// raw / ||raw||. Throws ZeroVector when the norm is below 1e-300.
PureState normalize(const RawAmplitudes& raw);
PureState normalize(const ComplexVector& raw);

/// |<a|b>|^2. Throws DimensionMismatch.
double fidelity(const PureState& a, const PureState& b);

/// 1 - fidelity(a, b), clamped to [0, 1].
double infidelity(const PureState& a, const PureState& b);

/// 1 - |estimate . truth^*|^2 / (K N) evaluated directly on unnormalized
/// coordinates, with K and N their squared norms.
double raw_infidelity(const RawAmplitudes& estimate,
                      const RawAmplitudes& truth);

/// Haar-uniform pure state: d i.i.d. standard complex Gaussians, normalized.
PureState haar_random_state(Eigen::Index dim, Rng& rng);

}  // namespace cspsamle

#endif  // CSPSAMLE_STATES_H
