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

#include "cspsamle/harness.h"

#include <cmath>

#include "gtest/gtest.h"

#include "cspsamle/errors.h"

namespace cspsamle {
namespace {

ExperimentConfig small_config(Mode mode, std::int64_t n_est) {
  ExperimentConfig c;
  c.dim = 2;
  c.n_est = n_est;
  c.k_max = 6;
  c.num_states = 3;
  c.guesses = 4;
  c.reps = 2;
  c.gains = default_gains(n_est);
  c.mode = mode;
  c.master_seed = 5;
  c.workers = 1;
  return c;
}

void expect_same_report(const AggregateReport& a, const AggregateReport& b) {
  ASSERT_EQ(a.pooled.size(), b.pooled.size());
  for (std::size_t k = 0; k < a.pooled.size(); ++k) {
    EXPECT_EQ(a.pooled[k].mean, b.pooled[k].mean);
    EXPECT_EQ(a.pooled[k].variance, b.pooled[k].variance);
    EXPECT_EQ(a.pooled[k].median, b.pooled[k].median);
    EXPECT_EQ(a.pooled[k].q1, b.pooled[k].q1);
    EXPECT_EQ(a.pooled[k].q3, b.pooled[k].q3);
  }
  ASSERT_EQ(a.per_state.size(), b.per_state.size());
  for (std::size_t s = 0; s < a.per_state.size(); ++s) {
    for (std::size_t k = 0; k < a.per_state[s].size(); ++k) {
      EXPECT_EQ(a.per_state[s][k].mean, b.per_state[s][k].mean);
      EXPECT_EQ(a.per_state[s][k].median, b.per_state[s][k].median);
    }
  }
}

TEST(harness, mode_names_round_trip) {
  EXPECT_EQ(parse_mode(mode_name(Mode::kCspsaMle)), Mode::kCspsaMle);
  EXPECT_EQ(parse_mode(mode_name(Mode::kCspsaOnly)), Mode::kCspsaOnly);
  EXPECT_EQ(mode_name(Mode::kCspsaMle), "cspsa-mle");
  EXPECT_THROW(parse_mode("spsa"), ConfigInvalid);
}

TEST(harness, config_validation) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 10);
  EXPECT_NO_THROW(c.validate());
  c.dim = 1;
  EXPECT_THROW(c.validate(), ConfigInvalid);
  c = small_config(Mode::kCspsaMle, 10);
  c.reps = 0;
  EXPECT_THROW(run_experiment(c), ConfigInvalid);
  c = small_config(Mode::kCspsaMle, 10);
  c.gains.b = -1;
  EXPECT_THROW(c.validate(), ConfigInvalid);
}

TEST(harness, trial_trace_shape) {
  for (Mode mode : {Mode::kCspsaMle, Mode::kCspsaOnly}) {
    const ExperimentConfig c = small_config(mode, 100);
    Rng rng(71);
    const PureState truth = haar_random_state(2, rng);
    const PureState guess = haar_random_state(2, rng);
    const TrialTrace t = run_trial(c, truth, guess, rng);
    ASSERT_EQ(t.infidelity.size(), static_cast<std::size_t>(c.k_max));
    for (double x : t.infidelity) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

TEST(harness, trial_dimension_mismatch) {
  const ExperimentConfig c = small_config(Mode::kCspsaMle, 100);
  Rng rng(72);
  EXPECT_THROW(run_trial(c, haar_random_state(3, rng), haar_random_state(2, rng), rng),
               DimensionMismatch);
}

TEST(harness, trial_is_deterministic) {
  for (Mode mode : {Mode::kCspsaMle, Mode::kCspsaOnly}) {
    const ExperimentConfig c = small_config(mode, 10);
    Rng setup(73);
    const PureState truth = haar_random_state(2, setup);
    const PureState guess = haar_random_state(2, setup);
    Rng a(1234), b(1234);
    EXPECT_EQ(run_trial(c, truth, guess, a).infidelity, run_trial(c, truth, guess, b).infidelity);
  }
}

// Starting on the truth with near-exact statistics keeps the estimate there.
TEST(harness, near_fixed_point_from_truth) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 1000000);
  c.k_max = 10;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const PureState truth = haar_random_state(2, rng);
    const TrialTrace t = run_trial(c, truth, truth, rng);
    for (double x : t.infidelity) EXPECT_LE(x, 1e-3) << "seed " << seed;
  }
}

TEST(harness, single_run_sweep_equals_run_trial) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 100);
  c.num_states = 1;
  c.guesses = 1;
  c.reps = 1;
  const AggregateReport report = run_experiment(c);

  Rng truth_rng(truth_seed(c.master_seed, 0));
  const PureState truth = haar_random_state(2, truth_rng);
  Rng guess_rng(guess_seed(c.master_seed, 0, 0));
  const PureState guess = haar_random_state(2, guess_rng);
  Rng rng(trial_seed(c.master_seed, 0, 0, 0));
  const TrialTrace t = run_trial(c, truth, guess, rng);

  ASSERT_EQ(report.pooled.size(), t.infidelity.size());
  for (std::size_t k = 0; k < t.infidelity.size(); ++k) {
    EXPECT_EQ(report.pooled[k].mean, t.infidelity[k]);
    EXPECT_EQ(report.pooled[k].median, t.infidelity[k]);
    EXPECT_EQ(report.pooled[k].variance, 0.0);
    EXPECT_EQ(report.per_state[0][k].mean, t.infidelity[k]);
  }
}

TEST(harness, report_independent_of_worker_count) {
  for (Mode mode : {Mode::kCspsaMle, Mode::kCspsaOnly}) {
    ExperimentConfig c = small_config(mode, 100);
    c.workers = 1;
    const AggregateReport serial = run_experiment(c);
    for (unsigned w : {2u, 3u, 8u}) {
      c.workers = w;
      expect_same_report(serial, run_experiment(c));
    }
  }
}

TEST(harness, seeds_change_results) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 100);
  const AggregateReport a = run_experiment(c);
  c.master_seed += 1;
  const AggregateReport b = run_experiment(c);
  EXPECT_NE(a.pooled.back().mean, b.pooled.back().mean);
}

TEST(harness, aggregate_bookkeeping) {
  const ExperimentConfig c = small_config(Mode::kCspsaMle, 100);
  const AggregateReport r = run_experiment(c);
  ASSERT_EQ(r.pooled.size(), static_cast<std::size_t>(c.k_max));
  ASSERT_EQ(r.per_state.size(), static_cast<std::size_t>(c.num_states));
  for (std::size_t k = 0; k < r.pooled.size(); ++k) {
    const auto iteration = static_cast<std::int64_t>(k + 1);
    EXPECT_EQ(r.total_copies[k], 2 * iteration * c.n_est);
    EXPECT_DOUBLE_EQ(r.gm_pure[k], gill_massar_pure(c.dim, 2 * iteration * c.n_est));
    EXPECT_DOUBLE_EQ(r.gm_mixed[k], gill_massar_mixed(c.dim, 2 * iteration * c.n_est));
    EXPECT_EQ(r.pooled[k].count, c.num_states * c.guesses * c.reps);

    // Pooled mean = average of per-state means (equal run counts per state).
    double mean_of_means = 0.0;
    for (const auto& per_state : r.per_state) {
      EXPECT_EQ(per_state[k].count, c.guesses * c.reps);
      mean_of_means += per_state[k].mean;
    }
    mean_of_means /= static_cast<double>(c.num_states);
    EXPECT_NEAR(r.pooled[k].mean, mean_of_means, 1e-15);
  }
}

TEST(harness, pooled_mean_reaches_reported_value_shots_100) {
  ExperimentConfig c;
  c.dim = 2;
  c.n_est = 100;
  c.k_max = 10;
  c.num_states = 20;
  c.guesses = 50;
  c.reps = 4;
  c.gains = default_gains(100);
  c.master_seed = 2024;
  const double mean = run_experiment(c).pooled.back().mean;
  EXPECT_GE(mean, 7e-4 / 3.0);
  EXPECT_LE(mean, 7e-4 * 3.0);
}

TEST(harness, pooled_mean_non_increasing_after_iteration_three) {
  int monotone = 0;
  const int seeds = 20;
  for (int seed = 0; seed < seeds; ++seed) {
    ExperimentConfig c = small_config(Mode::kCspsaMle, 100);
    c.k_max = 10;
    c.num_states = 20;  // the default desk; smaller desks are dominated by
    c.guesses = 50;     // the occasional run stuck at a mirror maximum
    c.reps = 4;
    c.master_seed = static_cast<std::uint64_t>(seed);
    const AggregateReport r = run_experiment(c);
    bool ok = true;
    for (std::size_t k = 3; k < r.pooled.size(); ++k) {
      ok &= r.pooled[k].mean <= r.pooled[k - 1].mean;
    }
    monotone += ok;
  }
  EXPECT_GE(monotone, 19);
}

TEST(harness, mle_dominates_plain_optimizer) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 1000);
  c.k_max = 10;
  c.num_states = 10;
  c.guesses = 20;
  c.reps = 2;
  const double with_mle = run_experiment(c).pooled.back().mean;
  c.mode = Mode::kCspsaOnly;
  const double without = run_experiment(c).pooled.back().mean;
  EXPECT_LE(10.0 * with_mle, without);
}

TEST(harness, median_below_pure_bound_at_iteration_ten) {
  ExperimentConfig c = small_config(Mode::kCspsaMle, 1000);
  c.k_max = 10;
  c.num_states = 10;
  c.guesses = 20;
  c.reps = 2;
  const AggregateReport r = run_experiment(c);
  EXPECT_LT(r.pooled.back().median, r.gm_pure.back());
}

}  // namespace
}  // namespace cspsamle
