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

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"

#include "cspsamle/report.h"

namespace cspsamle {
namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

TEST(cli, example_invocation_writes_report) {
  const std::string path = ::testing::TempDir() + "cli_report.csv";
  std::filesystem::remove(path);
  std::ostringstream out, err;
  const int code = cli_main(
      split("--dim 2 --shots 100 --iters 10 --states 5 --guesses 5 --reps 2 --seed 7 "
            "--mode cspsa-mle --out " + path),
      out, err);
  EXPECT_EQ(code, 0) << err.str();
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto rows = read_report(path);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows.back().k, 10);
  EXPECT_EQ(rows.back().n_total, 2000);
}

TEST(cli, dimension_one_is_a_usage_error) {
  std::ostringstream out, err;
  EXPECT_EQ(cli_main(split("--dim 1 --shots 10 --out x.csv"), out, err), 2);
  EXPECT_FALSE(err.str().empty());
}

TEST(cli, unknown_flag_is_a_usage_error) {
  std::ostringstream out, err;
  EXPECT_NE(cli_main(split("--dim 2 --shots 10 --out x.csv --bogus 3"), out, err), 0);
}

TEST(cli, unknown_mode_is_rejected) {
  std::ostringstream out, err;
  EXPECT_NE(cli_main(split("--dim 2 --shots 10 --out x.csv --mode spsa"), out, err), 0);
}

TEST(cli, perturbation_gain_defaults_by_shots_decade) {
  std::ostringstream out, err;
  const std::pair<const char*, double> cases[] = {
      {"10", 0.35}, {"100", 0.3}, {"1000", 0.07}, {"2000", 0.07},
      {"10000", 0.06}, {"100000", 0.03}};
  for (const auto& [shots, b] : cases) {
    const CliParse p = parse_cli(split(std::string("--dim 2 --out x.csv --shots ") + shots), out, err);
    ASSERT_TRUE(p.config.has_value());
    EXPECT_DOUBLE_EQ(p.config->gains.b, b) << shots;
    EXPECT_DOUBLE_EQ(p.config->gains.a, 3.0);
    EXPECT_DOUBLE_EQ(p.config->gains.r, 1.0 / 6.0);
  }
  const CliParse p = parse_cli(split("--dim 2 --out x.csv --shots 10 --b-gain 0.5 --a-gain 2 "
                                     "--big-a 1 --s-exp 0.6 --r-exp 0.1 --mode cspsa-only "
                                     "--workers 2 --per-state"),
                               out, err);
  ASSERT_TRUE(p.config.has_value());
  EXPECT_DOUBLE_EQ(p.config->gains.b, 0.5);
  EXPECT_DOUBLE_EQ(p.config->gains.a, 2.0);
  EXPECT_DOUBLE_EQ(p.config->gains.big_a, 1.0);
  EXPECT_DOUBLE_EQ(p.config->gains.s, 0.6);
  EXPECT_DOUBLE_EQ(p.config->gains.r, 0.1);
  EXPECT_EQ(p.config->mode, Mode::kCspsaOnly);
  EXPECT_EQ(p.config->workers, 2u);
  EXPECT_TRUE(p.config->per_state);
}

TEST(cli, invalid_gain_reports_config_error) {
  std::ostringstream out, err;
  EXPECT_EQ(cli_main(split("--dim 2 --shots 10 --iters 1 --states 1 --guesses 1 --reps 1 "
                           "--b-gain -1 --out x.csv"),
                     out, err),
            2);
  EXPECT_NE(err.str().find("invalid configuration"), std::string::npos);
}

}  // namespace
}  // namespace cspsamle
