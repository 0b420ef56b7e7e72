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

#ifndef CSPSAMLE_HARNESS_H
#define CSPSAMLE_HARNESS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cspsamle/bounds.h"
#include "cspsamle/cspsa.h"
#include "cspsamle/mle.h"
#include "cspsamle/states.h"

namespace cspsamle {

enum class Mode {
  kCspsaMle,   // every iterate is refined by accumulated-likelihood MLE
  kCspsaOnly,  // plain optimizer, measurement records are discarded
};

/// "cspsa-mle" or "cspsa-only".
std::string_view mode_name(Mode mode);
/// Inverse of mode_name; throws ConfigInvalid.
Mode parse_mode(std::string_view name);

struct ExperimentConfig {
  std::int64_t dim = 2;
  std::int64_t n_est = 100;
  std::int64_t k_max = 10;
  std::int64_t num_states = 20;
  std::int64_t guesses = 50;
  std::int64_t reps = 4;
  GainParams gains = default_gains(100);
  Mode mode = Mode::kCspsaMle;
  std::uint64_t master_seed = 0;
  MleConfig mle{};
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Emit per-state rows in addition to the pooled rows.
  bool per_state = false;
  std::string output_path;

  /// Throws ConfigInvalid describing the first violated constraint.
  void validate() const;
};

/// Exact infidelity of the estimate against the truth after each iteration.
struct TrialTrace {
  std::vector<double> infidelity;
  std::int64_t state_id = 0;
  std::int64_t guess_id = 0;
  std::int64_t rep_id = 0;
  /// Updates discarded because they collapsed the iterate to ~0.
  std::int64_t rejected_steps = 0;
};

/// One full tomography run of k_max iterations. In kCspsaMle mode the
/// refined state becomes the next iterate; in kCspsaOnly mode the
/// normalized iterate is the estimate.
TrialTrace run_trial(const ExperimentConfig& config, const PureState& truth,
                     const PureState& initial_guess, Rng& rng);

struct AggregateReport {
  ExperimentConfig config;
  /// Indexed by iteration k - 1.
  std::vector<std::int64_t> total_copies;
  std::vector<double> gm_pure;
  std::vector<double> gm_mixed;
  /// Statistics over every run of every state.
  std::vector<SummaryStats> pooled;
  /// per_state[s][k - 1]: statistics over the guesses x reps runs of state s.
  std::vector<std::vector<SummaryStats>> per_state;
  std::int64_t rejected_steps = 0;
};

/// Streams, per documented derivation (see random.h):
///   truth of state s       derive_seed(seed, {1, s})
///   guess g of state s     derive_seed(seed, {2, s, g})
///   repetition r           derive_seed(seed, {3, s, g, r})
std::uint64_t truth_seed(std::uint64_t master, std::int64_t state_id);
std::uint64_t guess_seed(std::uint64_t master, std::int64_t state_id,
                         std::int64_t guess_id);
std::uint64_t trial_seed(std::uint64_t master, std::int64_t state_id,
                         std::int64_t guess_id, std::int64_t rep_id);

/// Runs the full Monte Carlo sweep. The result depends only on `config`
/// and not on the worker count.
AggregateReport run_experiment(const ExperimentConfig& config);

}  // namespace cspsamle

#endif  // CSPSAMLE_HARNESS_H
