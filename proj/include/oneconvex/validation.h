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

#ifndef ONECONVEX_VALIDATION_H_
#define ONECONVEX_VALIDATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oneconvex {

// Self-check suites behind `oneconvex validate`. `kQuick` shrinks sample
// sizes to finish in well under a minute; `kFull` runs the 10^5-sample
// versions.
enum class ValidationLevel { kQuick, kFull };

std::optional<ValidationLevel> parse_validation_level(std::string_view text);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<SuiteResult> run_validation(ValidationLevel level,
                                        std::uint64_t seed, unsigned jobs = 0);

}  // namespace oneconvex

#endif  // ONECONVEX_VALIDATION_H_
