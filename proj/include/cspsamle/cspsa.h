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

#ifndef CSPSAMLE_CSPSA_H
#define CSPSAMLE_CSPSA_H

#include <cstdint>

#include "cspsamle/states.h"

namespace cspsamle {

/// Gain schedule constants: a_k = a / (10k + 1 + A)^s, c_k = b / (10k + 1)^r.
struct GainParams {
  double a = 3.0;
  double big_a = 0.0;
  double s = 1.0;
  double b = 0.35;
  double r = 1.0 / 6.0;

  /// Throws InvalidArgument unless all fields are finite, a, b, s, r > 0
  /// and A >= 0.
  void validate() const;
};

/// The tabulated perturbation gain b for shots per measurement n_est:
/// 0.35, 0.3, 0.07, 0.06, 0.03 at 10, 10^2, ..., 10^5, picked by the nearest
/// decade on a log scale and clamped to that range.
double default_perturbation_gain(std::int64_t n_est);

/// a = 3, A = 0, s = 1, r = 1/6 and b from default_perturbation_gain.
GainParams default_gains(std::int64_t n_est);

struct Gains {
  double step;          // a_k
  double perturbation;  // c_k
};

/// Gains at iteration k >= 1.
Gains gains_at(const GainParams& params, std::int64_t k);

/// A vector with entries drawn from {+1, -1, +i, -i}.
class Perturbation {
 public:
  /// Throws InvalidArgument on any entry outside the four allowed values.
  explicit Perturbation(ComplexVector entries);

  const ComplexVector& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.size(); }

 private:
  ComplexVector entries_;
};

/// I.i.d. uniform entries over {+1, -1, +i, -i}.
Perturbation sample_perturbation(Eigen::Index dim, Rng& rng);

struct PerturbedGuesses {
  RawAmplitudes plus;
  RawAmplitudes minus;
};

/// z +/- c * delta.
PerturbedGuesses perturbed_guesses(const RawAmplitudes& z_hat, double c_k,
                                   const Perturbation& delta);

/// Two-point estimate of the Wirtinger gradient d f / d z^*:
/// g_i = (f_plus - f_minus) / (2 c_k conj(delta_i)).
ComplexVector gradient_estimate(double f_plus, double f_minus, double c_k,
                                const Perturbation& delta);

/// z - a_k * g. Throws DegenerateIterate if the result has norm < 1e-12.
RawAmplitudes update(const RawAmplitudes& z_hat, double a_k,
                     const ComplexVector& g_hat);

}  // namespace cspsamle

#endif  // CSPSAMLE_CSPSA_H
