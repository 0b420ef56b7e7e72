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

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "cspsamle/errors.h"
#include "cspsamle/measurement.h"

namespace cspsamle {

std::string_view mode_name(Mode mode) {
  return mode == Mode::kCspsaMle ? "cspsa-mle" : "cspsa-only";
}

Mode parse_mode(std::string_view name) {
  if (name == "cspsa-mle") return Mode::kCspsaMle;
  if (name == "cspsa-only") return Mode::kCspsaOnly;
  throw ConfigInvalid("unknown mode '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  if (dim < 2) throw ConfigInvalid("dimension must be at least 2");
  if (n_est < 1) throw ConfigInvalid("shots per measurement must be at least 1");
  if (k_max < 1) throw ConfigInvalid("iterations must be at least 1");
  if (num_states < 1 || guesses < 1 || reps < 1) {
    throw ConfigInvalid("states, guesses and reps must be at least 1");
  }
  try {
    gains.validate();
    mle.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigInvalid(e.what());
  }
}

TrialTrace run_trial(const ExperimentConfig& config, const PureState& truth,
                     const PureState& initial_guess, Rng& rng) {
  if (truth.dim() != config.dim || initial_guess.dim() != config.dim) {
    throw DimensionMismatch("run_trial: states must have the configured dimension");
  }
  const bool with_mle = config.mode == Mode::kCspsaMle;

  TrialTrace trace;
  trace.infidelity.reserve(static_cast<std::size_t>(config.k_max));
  AccumulatedData data;
  RawAmplitudes z_hat = initial_guess.raw();

  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    const Gains gains = gains_at(config.gains, k);
    const Perturbation delta = sample_perturbation(config.dim, rng);
    const PerturbedGuesses guesses = perturbed_guesses(z_hat, gains.perturbation, delta);

    MeasurementBasis basis_plus = complete_basis(normalize(guesses.plus));
    MeasurementBasis basis_minus = complete_basis(normalize(guesses.minus));
    const std::vector<double> p_plus = outcome_probabilities(basis_plus, truth);
    const std::vector<double> p_minus = outcome_probabilities(basis_minus, truth);
    CountRecord record_plus(std::move(basis_plus), simulate_counts(p_plus, config.n_est, rng));
    CountRecord record_minus(std::move(basis_minus), simulate_counts(p_minus, config.n_est, rng));

    const ComplexVector g_hat =
        gradient_estimate(estimate_infidelity(record_plus),
                          estimate_infidelity(record_minus), gains.perturbation, delta);

    RawAmplitudes next = z_hat;
    try {
      next = update(z_hat, gains.step, g_hat);
    } catch (const DegenerateIterate&) {
      ++trace.rejected_steps;
    }

    if (with_mle) {
      data.add(std::move(record_plus));
      data.add(std::move(record_minus));
      const PureState refined = refine(data, normalize(next), config.mle);
      trace.infidelity.push_back(infidelity(refined, truth));
      z_hat = refined.raw();
    } else {
      trace.infidelity.push_back(infidelity(normalize(next), truth));
      z_hat = std::move(next);
    }
  }
  return trace;
}

std::uint64_t truth_seed(std::uint64_t master, std::int64_t state_id) {
  return derive_seed(master, {1, static_cast<std::uint64_t>(state_id)});
}

std::uint64_t guess_seed(std::uint64_t master, std::int64_t state_id,
                         std::int64_t guess_id) {
  return derive_seed(master, {2, static_cast<std::uint64_t>(state_id),
                              static_cast<std::uint64_t>(guess_id)});
}

std::uint64_t trial_seed(std::uint64_t master, std::int64_t state_id,
                         std::int64_t guess_id, std::int64_t rep_id) {
  return derive_seed(master, {3, static_cast<std::uint64_t>(state_id),
                              static_cast<std::uint64_t>(guess_id),
                              static_cast<std::uint64_t>(rep_id)});
}

AggregateReport run_experiment(const ExperimentConfig& config) {
  config.validate();

  std::vector<PureState> truths;
  truths.reserve(static_cast<std::size_t>(config.num_states));
  for (std::int64_t s = 0; s < config.num_states; ++s) {
    Rng rng(truth_seed(config.master_seed, s));
    truths.push_back(haar_random_state(config.dim, rng));
  }

  const std::int64_t per_state_runs = config.guesses * config.reps;
  const std::int64_t total_runs = config.num_states * per_state_runs;
  std::vector<TrialTrace> traces(static_cast<std::size_t>(total_runs));

  // Work unit = one (state, guess) pair; its reps share the guess.
  const std::int64_t units = config.num_states * config.guesses;
  std::atomic<std::int64_t> next_unit{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::int64_t unit = next_unit.fetch_add(1);
      if (unit >= units) return;
      const std::int64_t s = unit / config.guesses;
      const std::int64_t g = unit % config.guesses;
      try {
        Rng guess_rng(guess_seed(config.master_seed, s, g));
        const PureState guess = haar_random_state(config.dim, guess_rng);
        for (std::int64_t r = 0; r < config.reps; ++r) {
          Rng rng(trial_seed(config.master_seed, s, g, r));
          TrialTrace trace = run_trial(config, truths[static_cast<std::size_t>(s)], guess, rng);
          trace.state_id = s;
          trace.guess_id = g;
          trace.rep_id = r;
          traces[static_cast<std::size_t>(unit * config.reps + r)] = std::move(trace);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_unit.store(units);
        return;
      }
    }
  };

  unsigned workers = config.workers != 0 ? config.workers
                                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, units));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  AggregateReport report;
  report.config = config;
  const auto k_max = static_cast<std::size_t>(config.k_max);
  report.per_state.resize(static_cast<std::size_t>(config.num_states));
  std::vector<double> pooled_samples(static_cast<std::size_t>(total_runs));
  std::vector<double> state_samples(static_cast<std::size_t>(per_state_runs));

  for (const TrialTrace& t : traces) report.rejected_steps += t.rejected_steps;

  for (std::size_t k = 0; k < k_max; ++k) {
    const auto iteration = static_cast<std::int64_t>(k + 1);
    const std::int64_t n_total = total_ensemble(config.n_est, iteration);
    report.total_copies.push_back(n_total);
    report.gm_pure.push_back(gill_massar_pure(config.dim, n_total));
    report.gm_mixed.push_back(gill_massar_mixed(config.dim, n_total));

    for (std::size_t i = 0; i < traces.size(); ++i) {
      pooled_samples[i] = traces[i].infidelity[k];
    }
    report.pooled.push_back(summarize(pooled_samples));

    for (std::int64_t s = 0; s < config.num_states; ++s) {
      const auto offset = static_cast<std::size_t>(s * per_state_runs);
      for (std::size_t j = 0; j < state_samples.size(); ++j) {
        state_samples[j] = traces[offset + j].infidelity[k];
      }
      report.per_state[static_cast<std::size_t>(s)].push_back(summarize(state_samples));
    }
  }
  return report;
}

}  // namespace cspsamle
