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

#include "cspsamle/cspsa.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "cspsamle/errors.h"

namespace cspsamle {

namespace {

constexpr std::array<double, 5> kTabulatedB = {0.35, 0.3, 0.07, 0.06, 0.03};

const std::array<Complex, 4>& unit_roots() {
  static const std::array<Complex, 4> roots = {
      Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 1.0), Complex(0.0, -1.0)};
  return roots;
}

bool is_unit_root(const Complex& z) {
  for (const Complex& w : unit_roots()) {
    if (z == w) return true;
  }
  return false;
}

}  // namespace

void GainParams::validate() const {
  const bool finite = std::isfinite(a) && std::isfinite(big_a) &&
                      std::isfinite(s) && std::isfinite(b) && std::isfinite(r);
  if (!finite || !(a > 0.0) || !(big_a >= 0.0) || !(s > 0.0) || !(b > 0.0) ||
      !(r > 0.0)) {
    throw InvalidArgument("gain parameters must be finite with a, b, s, r > 0 and A >= 0");
  }
}

double default_perturbation_gain(std::int64_t n_est) {
  if (n_est < 1) throw InvalidArgument("shots per measurement must be >= 1");
  const long decade = std::lround(std::log10(static_cast<double>(n_est)));
  const long index = std::clamp(decade, 1L, 5L) - 1;
  return kTabulatedB[static_cast<std::size_t>(index)];
}

GainParams default_gains(std::int64_t n_est) {
  GainParams params;
  params.b = default_perturbation_gain(n_est);
  return params;
}

Gains gains_at(const GainParams& params, std::int64_t k) {
  if (k < 1) throw InvalidArgument("iteration index starts at 1");
  const double t = 10.0 * static_cast<double>(k) + 1.0;
  return Gains{params.a / std::pow(t + params.big_a, params.s),
               params.b / std::pow(t, params.r)};
}

Perturbation::Perturbation(ComplexVector entries) : entries_(std::move(entries)) {
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    if (!is_unit_root(entries_(i))) {
      throw InvalidArgument("perturbation entries must lie in {+1, -1, +i, -i}");
    }
  }
}

Perturbation sample_perturbation(Eigen::Index dim, Rng& rng) {
  if (dim < 2) throw InvalidArgument("perturbation dimension must be at least 2");
  std::uniform_int_distribution<int> pick(0, 3);
  ComplexVector entries(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    entries(i) = unit_roots()[static_cast<std::size_t>(pick(rng))];
  }
  return Perturbation(std::move(entries));
}

PerturbedGuesses perturbed_guesses(const RawAmplitudes& z_hat, double c_k,
                                   const Perturbation& delta) {
  if (!(c_k > 0.0)) throw InvalidArgument("perturbation gain must be positive");
  if (z_hat.dim() != delta.dim()) {
    throw DimensionMismatch("perturbed_guesses: dimension mismatch");
  }
  return PerturbedGuesses{RawAmplitudes(z_hat.entries() + c_k * delta.entries()),
                          RawAmplitudes(z_hat.entries() - c_k * delta.entries())};
}

ComplexVector gradient_estimate(double f_plus, double f_minus, double c_k,
                                const Perturbation& delta) {
  if (!(c_k > 0.0)) throw InvalidArgument("perturbation gain must be positive");
  const double diff = f_plus - f_minus;
  ComplexVector g(delta.dim());
  for (Eigen::Index i = 0; i < delta.dim(); ++i) {
    g(i) = diff / (2.0 * c_k * std::conj(delta.entries()(i)));
  }
  return g;
}

RawAmplitudes update(const RawAmplitudes& z_hat, double a_k,
                     const ComplexVector& g_hat) {
  if (z_hat.dim() != g_hat.size()) {
    throw DimensionMismatch("update: iterate and gradient dimensions differ");
  }
  ComplexVector next = z_hat.entries() - a_k * g_hat;
  if (!(next.norm() >= 1e-12)) {
    throw DegenerateIterate("update produced a near-zero iterate");
  }
  return RawAmplitudes(std::move(next));
}

}  // namespace cspsamle
