// Copyright 2026 The lrinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <ostream>
#include <string>

namespace lrinv::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kInfeasible = 2,
  kNumericalFailure = 3,
};

/// Executes one subcommand (synth, evolve, sweep, check) and writes its CSV
/// files plus `summary.txt` into `out_dir`. Diagnostics go to `err`, one line
/// per failure.
int run(const std::string& subcommand, const std::filesystem::path& config_path,
        const std::filesystem::path& out_dir, std::ostream& err);

/// Shortest round-trip decimal representation; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);

}  // namespace lrinv::cli
