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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cspsamle/errors.h"
#include "cspsamle/harness.h"
#include "cspsamle/report.h"

namespace cspsamle {

CliParse parse_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Monte Carlo benchmark of CSPSA-MLE pure-state tomography"};

  constexpr auto kMaxCount = std::numeric_limits<std::int64_t>::max();
  ExperimentConfig config;
  std::string mode = "cspsa-mle";
  std::optional<double> b_gain;
  std::optional<double> a_gain;
  std::optional<double> big_a;
  std::optional<double> s_exp;
  std::optional<double> r_exp;

  app.add_option("--dim", config.dim, "Hilbert space dimension d")
      ->required()->check(CLI::Range(std::int64_t{2}, kMaxCount));
  app.add_option("--shots", config.n_est, "Shots per projective measurement")
      ->required()->check(CLI::Range(std::int64_t{1}, kMaxCount));
  app.add_option("--iters", config.k_max, "Iterations per trial")
      ->capture_default_str()->check(CLI::Range(std::int64_t{1}, kMaxCount));
  app.add_option("--states", config.num_states, "Number of Haar-random truth states")
      ->capture_default_str()->check(CLI::Range(std::int64_t{1}, kMaxCount));
  app.add_option("--guesses", config.guesses, "Initial guesses per state")
      ->capture_default_str()->check(CLI::Range(std::int64_t{1}, kMaxCount));
  app.add_option("--reps", config.reps, "Repetitions per (state, guess) pair")
      ->capture_default_str()->check(CLI::Range(std::int64_t{1}, kMaxCount));
  app.add_option("--seed", config.master_seed, "Master seed")->capture_default_str();
  app.add_option("--mode", mode, "Estimator variant")
      ->capture_default_str()->check(CLI::IsMember({"cspsa-mle", "cspsa-only"}));
  app.add_option("--a-gain", a_gain, "Step gain a (default 3)");
  app.add_option("--big-a", big_a, "Step offset A (default 0)");
  app.add_option("--s-exp", s_exp, "Step decay exponent s (default 1)");
  app.add_option("--b-gain", b_gain, "Perturbation gain b (default: by shots decade)");
  app.add_option("--r-exp", r_exp, "Perturbation decay exponent r (default 1/6)");
  app.add_option("--workers", config.workers, "Worker threads, 0 = all cores")
      ->capture_default_str();
  app.add_flag("--per-state", config.per_state, "Also emit per-state rows");
  app.add_option("--out", config.output_path, "Output CSV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; every usage error exits 2.
    const int code = app.exit(e, out, err);
    return CliParse{std::nullopt, code == 0 ? 0 : 2};
  }

  config.mode = parse_mode(mode);
  config.gains = default_gains(config.n_est);
  if (a_gain) config.gains.a = *a_gain;
  if (big_a) config.gains.big_a = *big_a;
  if (s_exp) config.gains.s = *s_exp;
  if (b_gain) config.gains.b = *b_gain;
  if (r_exp) config.gains.r = *r_exp;
  return CliParse{config, 0};
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  const CliParse parsed = parse_cli(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  const ExperimentConfig& config = *parsed.config;

  try {
    const AggregateReport report = run_experiment(config);
    write_report(report, config.output_path);
    const SummaryStats& last = report.pooled.back();
    out << "d=" << config.dim << " n_est=" << config.n_est << " mode=" << mode_name(config.mode)
        << " k=" << config.k_max << " mean=" << format_real(last.mean)
        << " median=" << format_real(last.median)
        << " gm_pure=" << format_real(report.gm_pure.back()) << '\n';
  } catch (const ConfigInvalid& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cspsamle
