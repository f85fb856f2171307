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

#include "oneconvex/run_record.h"

#include <cmath>
#include <ctime>
#include <stdexcept>

namespace oneconvex {

nlohmann::ordered_json to_json(const RunRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["parameters"] = record.parameters;
  j["results"] = record.results;
  if (record.seed) {
    j["seed"] = *record.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["timestamp"] = record.timestamp;
  j["version"] = record.version;
  return j;
}

RunRecord run_record_from_json(const nlohmann::ordered_json& j) {
  auto require = [&j](const char* key, bool ok) {
    if (!j.contains(key) || !ok) {
      throw std::invalid_argument(std::string("run record field '") + key +
                                  "' is missing or malformed");
    }
  };
  if (!j.is_object()) throw std::invalid_argument("run record must be an object");
  require("command", j.contains("command") && j["command"].is_string());
  require("parameters", j.contains("parameters") && j["parameters"].is_object());
  require("results", j.contains("results") && j["results"].is_object());
  require("seed", j.contains("seed") &&
                      (j["seed"].is_null() || j["seed"].is_number_unsigned()));
  require("timestamp", j.contains("timestamp") && j["timestamp"].is_string());
  require("version", j.contains("version") && j["version"].is_string());

  RunRecord record;
  record.command = j["command"].get<std::string>();
  record.parameters = j["parameters"];
  record.results = j["results"];
  if (!j["seed"].is_null()) record.seed = j["seed"].get<std::uint64_t>();
  record.timestamp = j["timestamp"].get<std::string>();
  record.version = j["version"].get<std::string>();
  return record;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

nlohmann::ordered_json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace oneconvex
