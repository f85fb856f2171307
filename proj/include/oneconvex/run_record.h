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

#ifndef ONECONVEX_RUN_RECORD_H_
#define ONECONVEX_RUN_RECORD_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace oneconvex {

// Provenance record emitted once per CLI invocation. The JSON layout is
// described by schema/run_record.schema.json.
struct RunRecord {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  // Effective seed of randomized commands; empty for deterministic ones.
  std::optional<std::uint64_t> seed;
  std::string timestamp;
  std::string version = ONECONVEX_VERSION;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

nlohmann::ordered_json to_json(const RunRecord& record);

// Parses a record, throwing std::invalid_argument when a required field is
// missing or has the wrong type.
RunRecord run_record_from_json(const nlohmann::ordered_json& j);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string iso8601_utc_now();

// Stores a double, mapping non-finite values to null (JSON has no inf/nan).
nlohmann::ordered_json json_number(double value);

}  // namespace oneconvex

#endif  // ONECONVEX_RUN_RECORD_H_
