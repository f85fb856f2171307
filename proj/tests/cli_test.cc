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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "doctest.h"
#include "json.hpp"

namespace oneconvex::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::ordered_json json() const {
    return nlohmann::ordered_json::parse(out);
  }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("oneconvex_cli_" + name);
}

TEST_SUITE("cli") {
  TEST_CASE("estimate: three points give p_hat 1") {
    const Outcome o = invoke({"estimate", "--d", "2", "--r", "0", "--n", "3",
                              "--trials", "1000", "--seed", "42"});
    REQUIRE(o.code == kExitOk);
    const auto j = o.json();
    CHECK(j["command"] == "estimate");
    CHECK(j["seed"] == 42);
    CHECK(j["results"]["p_hat"] == 1.0);
    CHECK(j["results"]["successes"] == 1000);
  }

  TEST_CASE("estimate: d = 10, r = 0.5, n = 10") {
    const Outcome o = invoke({"estimate", "--d", "10", "--r", "0.5", "--n",
                              "10", "--trials", "10000", "--seed", "1"});
    REQUIRE(o.code == kExitOk);
    const double p = o.json()["results"]["p_hat"].get<double>();
    CHECK(p > 0.9);
    CHECK(p <= 1.0);
  }

  TEST_CASE("estimate: csv output and the default seed") {
    const Outcome o = invoke({"estimate", "--d", "3", "--n", "4", "--trials",
                              "50", "--format", "csv"});
    REQUIRE(o.code == kExitOk);
    const auto lines = split_lines(o.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "d,r,n,trials,seed,tol,successes,p_hat,ci_low,ci_high,wall_time_s");
    const auto cells = split_cells(lines[1]);
    REQUIRE(cells.size() == 11);
    CHECK(cells[4] == std::to_string(kDefaultSeed));
    CHECK(cells[6] == "50");
  }

  TEST_CASE("estimate: seeds are echoed and reproducible") {
    const Outcome a = invoke({"estimate", "--d", "4", "--r", "0.3", "--n",
                              "9", "--trials", "300", "--seed", "5"});
    const Outcome b = invoke({"estimate", "--d", "4", "--r", "0.3", "--n",
                              "9", "--trials", "300", "--seed", "5", "--jobs",
                              "3"});
    REQUIRE(a.code == kExitOk);
    REQUIRE(b.code == kExitOk);
    CHECK(a.json()["results"]["successes"] == b.json()["results"]["successes"]);

    const Outcome r = invoke({"estimate", "--d", "2", "--n", "3", "--trials",
                              "10", "--seed", "random"});
    REQUIRE(r.code == kExitOk);
    const auto seed = r.json()["seed"].get<std::uint64_t>();
    const Outcome again =
        invoke({"estimate", "--d", "2", "--n", "3", "--trials", "10", "--seed",
                std::to_string(seed)});
    CHECK(again.json()["results"]["successes"] ==
          r.json()["results"]["successes"]);
    CHECK(again.json()["seed"] == seed);
  }

  TEST_CASE("estimate: usage errors exit 2") {
    for (const std::vector<std::string>& args :
         std::vector<std::vector<std::string>>{
             {"estimate", "--d", "0", "--n", "3"},
             {"estimate", "--d", "2", "--r", "1.0", "--n", "3"},
             {"estimate", "--d", "2", "--n", "0"},
             {"estimate", "--d", "2", "--n", "3", "--trials", "0"},
             {"estimate", "--d", "2", "--n", "3", "--seed", "abc"},
             {"estimate", "--d", "2", "--n", "3", "--format", "xml"},
             {"estimate", "--d", "2", "--n", "3", "--tol", "0.1"},
             {"estimate", "--d", "2", "--n", "3", "--jobs", "-1"},
             {"estimate", "--d", "two", "--n", "3"},
             {"estimate", "--n", "3"},
             {"frobnicate"},
             {}}) {
      const Outcome o = invoke(args);
      CAPTURE(o.err);
      CHECK(o.code == kExitUsage);
      CHECK(o.out.empty());
      CHECK_FALSE(o.err.empty());
    }
  }

  TEST_CASE("estimate: resource cap exits 2") {
    const Outcome o = invoke({"estimate", "--d", "1000000", "--n", "1000000",
                              "--trials", "1000000"});
    CHECK(o.code == kExitUsage);
  }

  TEST_CASE("trial budget from the environment") {
    ::setenv(kTrialsEnvVar, "37", 1);
    const Outcome o = invoke({"estimate", "--d", "2", "--n", "3"});
    const Outcome explicit_trials =
        invoke({"estimate", "--d", "2", "--n", "3", "--trials", "12"});
    ::setenv(kTrialsEnvVar, "many", 1);
    const Outcome bad = invoke({"estimate", "--d", "2", "--n", "3"});
    ::unsetenv(kTrialsEnvVar);
    REQUIRE(o.code == kExitOk);
    CHECK(o.json()["results"]["trials"] == 37);
    CHECK(explicit_trials.json()["results"]["trials"] == 12);
    CHECK(bad.code == kExitUsage);
  }

  TEST_CASE("bounds: reference rows") {
    const Outcome a = invoke({"bounds", "--d", "10", "--r", "0.5", "--alpha", "0.05"});
    REQUIRE(a.code == kExitOk);
    const auto ja = a.json();
    CHECK(ja["results"]["f"].get<double>() ==
          doctest::Approx(7.151922818375489153).epsilon(1e-14));
    CHECK(ja["results"]["n_admissible"] == 7);
    CHECK(ja["results"]["prob_lower_bound_sharp"].get<double>() ==
          doctest::Approx(0.9589442815249267).epsilon(1e-14));
    CHECK(ja["results"]["regime"] == "SUBCRITICAL");
    CHECK(ja["seed"].is_null());

    const Outcome b = invoke({"bounds", "--d", "2", "--r", "0.5", "--alpha", "0.5"});
    REQUIRE(b.code == kExitOk);
    CHECK(b.json()["results"]["g"].get<double>() ==
          doctest::Approx(0.8685170918213297644).epsilon(1e-14));

    const Outcome c = invoke({"bounds", "--d", "30", "--r", "0.9", "--alpha", "0.1"});
    REQUIRE(c.code == kExitOk);
    CHECK(c.json()["results"]["regime"] == "SUPERCRITICAL");
  }

  TEST_CASE("bounds: r = 0 omits g with a note") {
    const Outcome o = invoke({"bounds", "--d", "6", "--r", "0", "--alpha", "0.5"});
    REQUIRE(o.code == kExitOk);
    const auto res = o.json()["results"];
    CHECK(res["f"].get<double>() == doctest::Approx(5.656854249492380));
    CHECK(res["g"].is_null());
    CHECK(res["ratio_f_over_g"].is_null());
    CHECK(res["regime"].is_null());
    CHECK(res["g_note"].is_string());
  }

  TEST_CASE("bounds: log values survive overflow") {
    const Outcome o = invoke({"bounds", "--d", "5000", "--r", "0.5", "--alpha", "0.1"});
    REQUIRE(o.code == kExitOk);
    const auto res = o.json()["results"];
    CHECK(res["f"].is_null());
    CHECK(res["log2_f"].get<double>() == doctest::Approx(2500 + 0.5 * std::log2(0.1)));
    CHECK(res["n_admissible"].is_null());
  }

  TEST_CASE("bounds: csv and errors") {
    const Outcome o = invoke({"bounds", "--d", "10", "--r", "0.5", "--alpha",
                              "0.05", "--format", "csv"});
    REQUIRE(o.code == kExitOk);
    const auto lines = split_lines(o.out);
    REQUIRE(lines.size() == 2);
    CHECK(split_cells(lines[0]).size() == split_cells(lines[1]).size());
    CHECK(invoke({"bounds", "--d", "10", "--alpha", "1.5"}).code == kExitUsage);
    CHECK(invoke({"bounds", "--d", "-1"}).code == kExitUsage);
  }

  TEST_CASE("sweep: eleven rows with a growing ratio") {
    const auto path = temp_path("sweep.csv");
    const Outcome o = invoke({"sweep", "--d", "10..20", "--r", "0.5",
                              "--alpha", "0.1", "--out", path.string()});
    REQUIRE(o.code == kExitOk);
    CHECK(o.json()["results"]["rows"] == 11);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto lines = split_lines(buffer.str());
    REQUIRE(lines.size() == 12);
    const auto header = split_cells(lines[0]);
    const auto column = std::find(header.begin(), header.end(), "ratio_f_over_g") -
                        header.begin();
    double previous = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto cells = split_cells(lines[i]);
      REQUIRE(cells.size() == header.size());
      const double ratio = std::stod(cells[column]);
      CHECK(ratio > previous);
      previous = ratio;
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("sweep: r = 0 rows leave g empty and simulate on request") {
    const auto path = temp_path("sweep_zero.csv");
    const Outcome o = invoke({"sweep", "--d", "4..6", "--r", "0,0.5", "--alpha",
                              "0.5", "--trials", "50", "--seed", "3", "--out",
                              path.string()});
    REQUIRE(o.code == kExitOk);
    CHECK(o.json()["seed"] == 3);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto lines = split_lines(buffer.str());
    REQUIRE(lines.size() == 7);
    const auto header = split_cells(lines[0]);
    const auto col = [&header](const std::string& name) {
      return std::find(header.begin(), header.end(), name) - header.begin();
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto cells = split_cells(lines[i]);
      REQUIRE(cells.size() == header.size());
      CHECK_FALSE(cells[col("f")].empty());
      CHECK(cells[col("g")].empty() == (cells[col("r")] == "0"));
      CHECK(cells[col("trials")] == "50");
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("sweep: errors") {
    CHECK(invoke({"sweep", "--d", "20..10", "--r", "0.5", "--out", "x.csv"}).code ==
          kExitUsage);
    CHECK(invoke({"sweep", "--d", "", "--r", "0.5", "--out", "x.csv"}).code ==
          kExitUsage);
    CHECK(invoke({"sweep", "--d", "5", "--r", "1.5", "--out", "x.csv"}).code ==
          kExitUsage);
    CHECK(invoke({"sweep", "--d", "5", "--r", "0.5"}).code == kExitUsage);
    const Outcome io = invoke({"sweep", "--d", "5..6", "--r", "0.5", "--out",
                               "/nonexistent-dir/sub/out.csv"});
    CHECK(io.code == kExitIo);
    CHECK_FALSE(io.err.empty());
  }

  TEST_CASE("validate: quick level passes") {
    const Outcome o = invoke({"validate", "--level", "quick", "--seed", "7"});
    CAPTURE(o.out);
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("all suites passed") != std::string::npos);

    const Outcome j = invoke({"validate", "--level", "quick", "--seed", "7",
                              "--format", "json"});
    REQUIRE(j.code == kExitOk);
    const auto rec = j.json();
    CHECK(rec["results"]["passed"] == true);
    CHECK(rec["seed"] == 7);
    CHECK(rec["results"]["suites"].size() >= 10);
  }

  TEST_CASE("validate: unknown level") {
    CHECK(invoke({"validate", "--level", "medium"}).code == kExitUsage);
  }

  TEST_CASE("help and version") {
    const Outcome h = invoke({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(h.out.find("estimate") != std::string::npos);
    const Outcome v = invoke({"--version"});
    CHECK(v.code == kExitOk);
    CHECK_FALSE(v.out.empty());
  }
}

}  // namespace
}  // namespace oneconvex::cli
