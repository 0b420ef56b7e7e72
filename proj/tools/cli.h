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

#ifndef CSPSAMLE_TOOLS_CLI_H
#define CSPSAMLE_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cspsamle/harness.h"

namespace cspsamle {

struct CliParse {
  /// Set when parsing succeeded and the experiment should run.
  std::optional<ExperimentConfig> config;
  /// Process exit code to use when `config` is empty (0 after --help).
  int exit_code = 0;
};

/// Flag parsing only. Gains omitted on the command line take their
/// defaults, with b chosen by the decade of --shots.
CliParse parse_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

/// Parses `args` (program name excluded), runs the experiment and writes
/// the CSV report. Returns 0 on success and nonzero after printing a
/// diagnostic to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cspsamle

#endif  // CSPSAMLE_TOOLS_CLI_H
