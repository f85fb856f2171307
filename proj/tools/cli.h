// Copyright 2026 The oneconvex Authors.
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

#ifndef ONECONVEX_TOOLS_CLI_H_
#define ONECONVEX_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oneconvex::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Seed used when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20260101;

// Overrides the default --trials of `estimate` and `sweep` when set.
inline constexpr const char* kTrialsEnvVar = "ONECONVEX_TRIALS";

// Runs the command line `args` (without the program name). Records and
// tables go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oneconvex::cli

#endif  // ONECONVEX_TOOLS_CLI_H_
