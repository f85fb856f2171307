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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "oneconvex/bounds.h"
#include "oneconvex/geometry.h"
#include "oneconvex/montecarlo.h"
#include "oneconvex/run_record.h"
#include "oneconvex/validation.h"

namespace oneconvex::cli {

namespace {

using nlohmann::ordered_json;

// Raised for bad flag values discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_number(double value) {
  if (!std::isfinite(value)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  return row;
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("--seed must be a nonnegative integer or 'random', got '" +
                     text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError("--seed does not fit in 64 bits");
  }
}

std::int64_t default_trials(std::int64_t fallback) {
  const char* env = std::getenv(kTrialsEnvVar);
  if (env == nullptr || *env == '\0') return fallback;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(kTrialsEnvVar) + " must be a nonnegative integer");
  }
  return std::stoll(text);
}

unsigned resolve_jobs(int jobs) {
  if (jobs < 0) throw UsageError("--jobs must be nonnegative");
  return jobs == 0 ? default_jobs() : static_cast<unsigned>(jobs);
}

RunRecord new_record(const std::string& command) {
  RunRecord record;
  record.command = command;
  record.timestamp = iso8601_utc_now();
  return record;
}

void emit_json(const RunRecord& record, std::ostream& out) {
  out << to_json(record).dump(2) << '\n';
}

// ---------------------------------------------------------------- estimate

struct EstimateFlags {
  int d = 0;
  double r = 0.0;
  std::int64_t n = 0;
  std::optional<std::int64_t> trials;
  std::string seed = std::to_string(kDefaultSeed);
  double tol = kDefaultHullTol;
  std::string format = "json";
  int jobs = 0;
};

int cmd_estimate(const EstimateFlags& f, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(f.seed);
  const std::int64_t trials = f.trials.value_or(default_trials(10'000));
  const unsigned jobs = resolve_jobs(f.jobs);
  const Experiment exp{LayerConfig(f.d, f.r), f.n, trials, seed, f.tol};
  const MCEstimate est = estimate_p_one_convex(exp, jobs);

  if (f.format == "csv") {
    out << "d,r,n,trials,seed,tol,successes,p_hat,ci_low,ci_high,wall_time_s\n";
    out << csv_row({std::to_string(f.d), csv_number(f.r), std::to_string(f.n),
                    std::to_string(trials), std::to_string(seed),
                    csv_number(f.tol), std::to_string(est.successes),
                    csv_number(est.p_hat), csv_number(est.ci_low),
                    csv_number(est.ci_high), csv_number(est.wall_time_seconds)})
        << '\n';
    return kExitOk;
  }

  RunRecord record = new_record("estimate");
  record.seed = seed;
  record.parameters = {{"d", f.d},           {"r", f.r},
                       {"n", f.n},           {"trials", trials},
                       {"tol", f.tol},       {"jobs", jobs}};
  record.results = {{"successes", est.successes},
                    {"trials", est.trials},
                    {"p_hat", est.p_hat},
                    {"ci_low", est.ci_low},
                    {"ci_high", est.ci_high},
                    {"wall_time", est.wall_time_seconds}};
  emit_json(record, out);
  return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsFlags {
  int d = 0;
  double r = 0.0;
  double alpha = 0.05;
  std::string format = "json";
};

// Every bound quantity for one (d, r, alpha); g-side entries are empty when
// r = 0.
struct BoundRow {
  BoundParams p;
  Log2Value f;
  std::optional<Log2Value> g, asym_g, ratio, asym_ratio;
  std::optional<Regime> regime;
};

BoundRow compute_bounds(const BoundParams& p) {
  BoundRow row;
  row.p = p;
  row.f = bound_f(p);
  if (p.inner_radius > 0.0) {
    row.g = bound_g(p);
    row.asym_g = asymptotic_g(p);
    row.ratio = ratio_f_over_g(p);
    row.asym_ratio = asymptotic_ratio_f_over_g(p);
    row.regime = classify_regime(p.inner_radius).regime;
  }
  return row;
}

std::string csv_value(const std::optional<Log2Value>& v) {
  return v ? csv_number(v->value()) : "";
}
std::string csv_log2(const std::optional<Log2Value>& v) {
  return v ? csv_number(v->log2) : "";
}
ordered_json json_value(const std::optional<Log2Value>& v) {
  return v ? json_number(v->value()) : ordered_json(nullptr);
}
ordered_json json_log2(const std::optional<Log2Value>& v) {
  return v ? json_number(v->log2) : ordered_json(nullptr);
}

int cmd_bounds(const BoundsFlags& flags, std::ostream& out) {
  const BoundParams p{flags.d, flags.r, flags.alpha};
  const BoundRow row = compute_bounds(p);
  const std::string regime =
      row.regime ? std::string(regime_name(*row.regime)) : "";

  if (flags.format == "csv") {
    out << "d,r,alpha,f,log2_f,g,log2_g,asymptotic_g,log2_asymptotic_g,"
           "ratio_f_over_g,log2_ratio_f_over_g,asymptotic_ratio,"
           "log2_asymptotic_ratio,regime\n";
    out << csv_row({std::to_string(p.dim), csv_number(p.inner_radius),
                    csv_number(p.alpha), csv_number(row.f.value()),
                    csv_number(row.f.log2), csv_value(row.g), csv_log2(row.g),
                    csv_value(row.asym_g), csv_log2(row.asym_g),
                    csv_value(row.ratio), csv_log2(row.ratio),
                    csv_value(row.asym_ratio), csv_log2(row.asym_ratio), regime})
        << '\n';
    return kExitOk;
  }

  RunRecord record = new_record("bounds");
  record.parameters = {{"d", p.dim}, {"r", p.inner_radius}, {"alpha", p.alpha}};
  ordered_json& res = record.results;
  res["f"] = json_number(row.f.value());
  res["log2_f"] = row.f.log2;
  if (const auto n = largest_admissible_n(p)) {
    res["n_admissible"] = *n;
    res["prob_lower_bound_sharp"] =
        prob_lower_bound(*n, LayerConfig(p.dim, p.inner_radius)).sharp;
  } else {
    res["n_admissible"] = nullptr;
    res["prob_lower_bound_sharp"] = nullptr;
  }
  res["g"] = json_value(row.g);
  res["log2_g"] = json_log2(row.g);
  if (!row.g) res["g_note"] = "prior bound is defined only for 0 < r < 1";
  res["asymptotic_g"] = json_value(row.asym_g);
  res["log2_asymptotic_g"] = json_log2(row.asym_g);
  res["ratio_f_over_g"] = json_value(row.ratio);
  res["log2_ratio_f_over_g"] = json_log2(row.ratio);
  res["asymptotic_ratio"] = json_value(row.asym_ratio);
  res["log2_asymptotic_ratio"] = json_log2(row.asym_ratio);
  res["regime"] = row.regime ? ordered_json(regime) : ordered_json(nullptr);
  res["r_star"] = kCriticalRadius;
  emit_json(record, out);
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepFlags {
  std::string d_range;
  std::vector<double> radii;
  double alpha = 0.05;
  std::optional<std::int64_t> trials;
  std::string seed = std::to_string(kDefaultSeed);
  double tol = kDefaultHullTol;
  std::string out_path;
  int jobs = 0;
};

// Parses "A..B" (inclusive) or a single "A".
std::pair<int, int> parse_d_range(const std::string& text) {
  auto to_int = [&text](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--d must look like 10..20 or 10, got '" + text + "'");
    }
    return std::stoi(part);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = to_int(text);
    return {d, d};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("--d range '" + text + "' is empty");
  return {lo, hi};
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out) {
  const auto [d_lo, d_hi] = parse_d_range(flags.d_range);
  if (flags.radii.empty()) throw UsageError("--r list is empty");
  const std::uint64_t seed = resolve_seed(flags.seed);
  const std::int64_t trials = flags.trials.value_or(default_trials(0));
  if (trials < 0) throw UsageError("--trials must be nonnegative");
  const unsigned jobs = resolve_jobs(flags.jobs);

  // Validate every cell before touching the output file.
  for (int d = d_lo; d <= d_hi; ++d) {
    for (double r : flags.radii) bound_f({d, r, flags.alpha});
  }

  std::ostringstream csv;
  csv << "d,r,alpha,f,log2_f,g,log2_g,ratio_f_over_g,log2_ratio_f_over_g,"
         "asymptotic_ratio,log2_asymptotic_ratio,regime,n,successes,trials,"
         "p_hat,ci_low,ci_high\n";
  std::int64_t rows = 0;
  std::uint64_t cell = 0;
  for (int d = d_lo; d <= d_hi; ++d) {
    for (double r : flags.radii) {
      const BoundParams p{d, r, flags.alpha};
      const BoundRow row = compute_bounds(p);
      std::vector<std::string> cells = {
          std::to_string(d),          csv_number(r),
          csv_number(flags.alpha),    csv_number(row.f.value()),
          csv_number(row.f.log2),     csv_value(row.g),
          csv_log2(row.g),            csv_value(row.ratio),
          csv_log2(row.ratio),        csv_value(row.asym_ratio),
          csv_log2(row.asym_ratio),
          row.regime ? std::string(regime_name(*row.regime)) : ""};
      const auto n = largest_admissible_n(p);
      if (trials > 0 && n) {
        const Experiment exp{LayerConfig(d, r), *n, trials,
                             derive_stream_seed(seed, cell), flags.tol};
        const MCEstimate est = estimate_p_one_convex(exp, jobs);
        cells.insert(cells.end(),
                     {std::to_string(*n), std::to_string(est.successes),
                      std::to_string(est.trials), csv_number(est.p_hat),
                      csv_number(est.ci_low), csv_number(est.ci_high)});
      } else {
        cells.insert(cells.end(), {n ? std::to_string(*n) : "", "", "", "", "", ""});
      }
      csv << csv_row(cells) << '\n';
      ++rows;
      ++cell;
    }
  }

  std::ofstream file(flags.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + flags.out_path + "' for writing");
  file << csv.str();
  file.close();
  if (!file) throw IoError("failed writing '" + flags.out_path + "'");

  RunRecord record = new_record("sweep");
  record.seed = seed;
  record.parameters = {{"d_min", d_lo},       {"d_max", d_hi},
                       {"r", flags.radii},    {"alpha", flags.alpha},
                       {"trials", trials},    {"tol", flags.tol},
                       {"jobs", jobs},        {"out", flags.out_path}};
  record.results = {{"rows", rows}, {"out", flags.out_path}};
  emit_json(record, out);
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateFlags {
  std::string level = "quick";
  std::string seed = std::to_string(kDefaultSeed);
  std::string format = "table";
  int jobs = 0;
};

int cmd_validate(const ValidateFlags& flags, std::ostream& out) {
  const auto level = parse_validation_level(flags.level);
  if (!level) throw UsageError("--level must be quick or full");
  const std::uint64_t seed = resolve_seed(flags.seed);
  const unsigned jobs = resolve_jobs(flags.jobs);
  const std::vector<SuiteResult> results = run_validation(*level, seed, jobs);
  const bool all_passed = std::all_of(results.begin(), results.end(),
                                      [](const SuiteResult& r) { return r.passed; });

  if (flags.format == "json") {
    RunRecord record = new_record("validate");
    record.seed = seed;
    record.parameters = {{"level", flags.level}, {"jobs", jobs}};
    ordered_json suites = ordered_json::array();
    for (const SuiteResult& r : results) {
      suites.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"seconds", r.seconds}});
    }
    record.results = {{"passed", all_passed}, {"suites", suites}};
    emit_json(record, out);
  } else {
    char line[512];
    std::snprintf(line, sizeof(line), "%-26s %-6s %9s  %s\n", "suite", "result",
                  "seconds", "detail");
    out << line;
    for (const SuiteResult& r : results) {
      std::snprintf(line, sizeof(line), "%-26s %-6s %9.2f  %s\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
      out << line;
    }
    out << (all_passed ? "all suites passed" : "SOME SUITES FAILED")
        << " (level=" << flags.level << ", seed=" << seed << ")\n";
  }
  return all_passed ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Monte Carlo and closed-form checks for random points in convex "
               "position inside a spherical layer"};
  app.name("oneconvex");
  app.require_subcommand(1);
  app.set_version_flag("--version", ONECONVEX_VERSION);

  EstimateFlags est;
  auto* estimate = app.add_subcommand("estimate", "estimate P(n layer points are 1-convex)");
  estimate->add_option("--d", est.d, "dimension")->required();
  estimate->add_option("--r", est.r, "inner radius, 0 <= r < 1");
  estimate->add_option("--n", est.n, "points per trial")->required();
  estimate->add_option("--trials", est.trials, "number of trials (default 10000)");
  estimate->add_option("--seed", est.seed, "integer seed or 'random'");
  estimate->add_option("--tol", est.tol, "hull membership tolerance");
  estimate->add_option("--format", est.format)->check(CLI::IsMember({"json", "csv"}));
  estimate->add_option("--jobs", est.jobs, "worker threads (0 = all cores)");

  BoundsFlags bnd;
  auto* bounds = app.add_subcommand("bounds", "evaluate f, g and their asymptotics");
  bounds->add_option("--d", bnd.d, "dimension")->required();
  bounds->add_option("--r", bnd.r, "inner radius, 0 <= r < 1");
  bounds->add_option("--alpha", bnd.alpha, "failure probability, 0 < alpha < 1");
  bounds->add_option("--format", bnd.format)->check(CLI::IsMember({"json", "csv"}));

  SweepFlags swp;
  auto* sweep = app.add_subcommand("sweep", "tabulate bounds over a range of d");
  sweep->add_option("--d", swp.d_range, "dimension range, e.g. 10..20")->required();
  sweep->add_option("--r", swp.radii, "comma-separated inner radii")
      ->required()
      ->delimiter(',');
  sweep->add_option("--alpha", swp.alpha, "failure probability");
  sweep->add_option("--trials", swp.trials, "trials per row (0 = bounds only)");
  sweep->add_option("--seed", swp.seed, "integer seed or 'random'");
  sweep->add_option("--tol", swp.tol, "hull membership tolerance");
  sweep->add_option("--out", swp.out_path, "CSV output path")->required();
  sweep->add_option("--jobs", swp.jobs, "worker threads (0 = all cores)");

  ValidateFlags val;
  auto* validate = app.add_subcommand("validate", "run the self-check suites");
  validate->add_option("--level", val.level, "quick or full");
  validate->add_option("--seed", val.seed, "integer seed or 'random'");
  validate->add_option("--format", val.format)->check(CLI::IsMember({"table", "json"}));
  validate->add_option("--jobs", val.jobs, "worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion&) {
    out << ONECONVEX_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "oneconvex: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(est, out);
    if (bounds->parsed()) return cmd_bounds(bnd, out);
    if (sweep->parsed()) return cmd_sweep(swp, out);
    if (validate->parsed()) return cmd_validate(val, out);
  } catch (const IoError& e) {
    err << "oneconvex: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "oneconvex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "oneconvex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "oneconvex: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oneconvex::cli
