/*
 * Copyright 2026 The skirental Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "nlohmann/json.hpp"
#include "skirental/equilibria.h"
#include "skirental/experiments.h"
#include "skirental/game.h"
#include "skirental/io.h"
#include "skirental/predictor.h"
#include "skirental/price_schedule.h"
#include "skirental/varying_price.h"

namespace skirental::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad flag values and unreadable inputs; mapped to kUsageError.
struct UsageError {
  std::string message;
};

template <typename T>
T OrUsage(absl::StatusOr<T> v, absl::string_view flag) {
  if (!v.ok()) {
    throw UsageError{absl::StrCat(flag, ": ", v.status().message())};
  }
  return *std::move(v);
}

std::string Fraction(const ExactRatio& x) { return FormatFraction(x); }

void PutRatio(Json& j, const std::string& key, const ExactRatio& x) {
  j[key] = FormatFraction(x);
  j[key + "_decimal"] = FormatDecimal(x);
}

// Text mode prints one "key: value" line per field.
void Emit(const Json& j, bool json, std::ostream& out) {
  if (json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

std::vector<ExactRatio> ParseRatioList(const std::string& text,
                                       absl::string_view flag) {
  std::vector<ExactRatio> out;
  for (absl::string_view part : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    out.push_back(OrUsage(ParseRatio(part), flag));
  }
  if (out.empty()) throw UsageError{absl::StrCat(flag, ": empty list")};
  return out;
}

// Accepts "0,25,50" and the arithmetic shorthand "0,25,...,250".
std::vector<double> ParseSigmaList(const std::string& text) {
  std::vector<std::string> parts = absl::StrSplit(text, ',', absl::SkipEmpty());
  std::vector<double> out;
  for (size_t i = 0; i < parts.size(); ++i) {
    const absl::string_view part = absl::StripAsciiWhitespace(parts[i]);
    if (part == "...") {
      if (out.size() < 2 || i + 1 != parts.size() - 1) {
        throw UsageError{
            "--sigmas: '...' needs two values before it and one after"};
      }
      double last = 0;
      if (!absl::SimpleAtod(parts[i + 1], &last)) {
        throw UsageError{
            absl::StrCat("--sigmas: bad value '", parts[i + 1], "'")};
      }
      const double step = out[out.size() - 1] - out[out.size() - 2];
      if (step <= 0) throw UsageError{"--sigmas: '...' needs a positive step"};
      const double first = out.back();
      for (int k = 1;; ++k) {
        const double v = first + k * step;
        if (v > last + step * 1e-9) break;
        out.push_back(v);
      }
      if (out.back() < last - step * 1e-9) out.push_back(last);
      return out;
    }
    double v = 0;
    if (!absl::SimpleAtod(part, &v)) {
      throw UsageError{absl::StrCat("--sigmas: bad value '", part, "'")};
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError{"--sigmas: empty list"};
  return out;
}

std::vector<Day> ParseDayList(const std::string& text, absl::string_view flag) {
  std::vector<Day> out;
  for (absl::string_view part : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    Day d = 0;
    if (!absl::SimpleAtoi(part, &d)) {
      throw UsageError{absl::StrCat(flag, ": bad integer '", part, "'")};
    }
    out.push_back(d);
  }
  return out;
}

// "75:50,50" or "75,50,50": purchase day, then the pledges.
std::pair<Day, std::vector<Dollars>> ParseSpec(const std::string& text) {
  std::vector<Day> values;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    values = ParseDayList(text.substr(0, colon), "--spec");
    if (values.size() != 1) throw UsageError{"--spec: bad purchase day"};
    for (Day w : ParseDayList(text.substr(colon + 1), "--spec")) {
      values.push_back(w);
    }
  } else {
    values = ParseDayList(text, "--spec");
  }
  if (values.size() < 2) {
    throw UsageError{"--spec: expected r:w1,w2,... or r,w1,w2,..."};
  }
  return {values[0], std::vector<Dollars>(values.begin() + 1, values.end())};
}

Json VerdictJson(const EqVerdict& v) {
  Json j;
  j["is_equilibrium"] = v.is_equilibrium;
  if (v.failing_condition) {
    j["failing_condition"] = std::string(ConditionTag(*v.failing_condition));
  }
  if (v.failing_agent) j["failing_agent"] = *v.failing_agent + 1;
  if (v.purchase_day) j["purchase_day"] = *v.purchase_day;
  Json roles = Json::array();
  for (AgentRole r : v.roles) roles.push_back(std::string(RoleName(r)));
  if (!roles.empty()) j["roles"] = roles;
  Json ratios = Json::array();
  for (const ExactRatio& r : v.ratios) ratios.push_back(Fraction(r));
  if (!ratios.empty()) j["ratios"] = ratios;
  return j;
}

struct Globals {
  bool json = false;
};

int Solve(const std::string& path, bool oracle, const Globals& g,
          std::ostream& out) {
  const PriceSchedule p = OrUsage(LoadSchedule(path), "--schedule");
  const SolveResult r = skirental::Solve(p);
  Json j;
  PutRatio(j, "c_opt", r.c_opt);
  j["optimal_buy_days"] = r.optimal_buy_days;
  j["buy_day"] = r.optimal_buy_days.front();
  j["witness_case"] = std::string(WitnessCaseName(r.witness_case));
  if (r.alternative_wait_day) {
    j["alternative_wait_day"] = *r.alternative_wait_day;
  }
  int code = kOk;
  if (oracle) {
    const Day bound = std::max(p.horizon(), 3 * p.license_cost());
    const SolveResult o = OrUsage(OracleCOpt(p, bound), "--oracle");
    const bool agrees =
        o.c_opt == r.c_opt && o.optimal_buy_days == r.optimal_buy_days;
    PutRatio(j, "oracle_c_opt", o.c_opt);
    j["oracle_buy_days"] = o.optimal_buy_days;
    j["oracle_agrees"] = agrees;
    if (!agrees) code = kOracleDisagreement;
  }
  Emit(j, g.json, out);
  return code;
}

int CheckProfile(const std::string& path, bool oracle, const Globals& g,
                 std::ostream& out) {
  const PledgeProfile f = OrUsage(LoadProfile(path), "--profile");
  const EqVerdict v = OrUsage(CheckPredictionless(f), "--profile");
  Json j = VerdictJson(v);
  int code = v.is_equilibrium ? kOk : kVerificationFailed;
  if (oracle) {
    const Certificate c = OrUsage(CertifyProfile(f), "--oracle");
    j["oracle_certified"] = c.certified;
    // Acceptance must imply certification; rejection need not imply the
    // converse.
    if (v.is_equilibrium && !c.certified) code = kOracleDisagreement;
  }
  Emit(j, g.json, out);
  return code;
}

int CheckSpec(const std::string& text, Dollars b, std::optional<int> n,
              bool oracle, const Globals& g, std::ostream& out) {
  const auto [r, weights] = ParseSpec(text);
  EquilibriumSpec spec;
  spec.license_cost = b;
  spec.r = r;
  spec.weights = weights;
  spec.n = n.value_or(static_cast<int>(weights.size()));
  const EqVerdict v = OrUsage(CheckRationalNoSelfPred(spec), "--spec");
  Json j = VerdictJson(v);
  int code = v.is_equilibrium ? kOk : kVerificationFailed;
  if (oracle) {
    const PledgeProfile f = OrUsage(ToProfile(spec), "--spec");
    const Certificate c = OrUsage(CertifyProfile(f), "--oracle");
    j["oracle_certified"] = c.certified;
    if (c.certified != v.is_equilibrium) code = kOracleDisagreement;
  }
  Emit(j, g.json, out);
  return code;
}

int EnumerateEq(Dollars b, int n, Day r_min, Day r_max, const Globals& g,
                std::ostream& out) {
  const std::vector<EquilibriumSpec> specs =
      OrUsage(EnumerateRationalEq(b, n, r_min, r_max), "enumerate-eq");
  if (g.json) {
    Json list = Json::array();
    for (const EquilibriumSpec& s : specs) {
      list.push_back({{"r", s.r}, {"weights", s.weights}});
    }
    Json j;
    j["count"] = specs.size();
    j["equilibria"] = list;
    out << j.dump() << "\n";
    return kOk;
  }
  for (const EquilibriumSpec& s : specs) {
    out << s.r << ":" << absl::StrJoin(s.weights, ",") << "\n";
  }
  out << "count: " << specs.size() << "\n";
  return kOk;
}

int BetaTableCmd(Dollars b, Day r, Dollars w, const std::string& lambda_text,
                 const Globals& g, std::ostream& out) {
  const ExactRatio lambda = OrUsage(ParseRatio(lambda_text), "--lambda");
  const BetaResult beta = OrUsage(BetaTable(r, w, b, lambda), "beta-table");
  Json j;
  PutRatio(j, "beta", beta.beta);
  j["row"] = std::string(BetaRowName(beta.row));
  j["m_star"] = beta.m_star;
  Json conds = Json::array();
  for (const auto& [label, holds] : beta.conditions_evaluated) {
    conds.push_back({{"condition", label}, {"holds", holds}});
  }
  j["conditions"] = conds;
  Json also = Json::array();
  for (BetaRow row : beta.also_matched) {
    also.push_back(std::string(BetaRowName(row)));
  }
  j["also_matched"] = also;
  j["improvement_threshold"] =
      Fraction(OrUsage(ImprovementThreshold(r, w, b), "beta-table"));
  Emit(j, g.json, out);
  return kOk;
}

int Alg1Cmd(const std::string& path, const std::string& lambda_text, Day active,
            Day predicted, const Globals& g, std::ostream& out) {
  const PriceSchedule p = OrUsage(LoadSchedule(path), "--schedule");
  const AlgParams params =
      OrUsage(AlgParams::Create(OrUsage(ParseRatio(lambda_text), "--lambda")),
              "--lambda");
  const PredictionOutcome o =
      OrUsage(RunPrediction(p, params, active, predicted), "--T/--That");
  Json j;
  j["i_star"] = o.days.i_star;
  j["r0"] = o.days.r0;
  j["r1"] = o.days.r1;
  j["r2"] = o.days.r2;
  j["r3"] = o.days.r3;
  j["branch"] = std::string(BranchName(o.branch));
  if (o.buy_day_taken) {
    j["buy_day"] = *o.buy_day_taken;
  } else {
    j["buy_day"] = nullptr;
  }
  j["cost"] = o.cost;
  j["opt"] = o.opt;
  PutRatio(j, "ratio", o.ratio);
  PutRatio(j, "robustness_bound", RobustnessBound(p, params));
  Emit(j, g.json, out);
  return kOk;
}

int Simulate(const std::string& path, const std::string& active_text,
             const Globals& g, std::ostream& out) {
  const PledgeProfile f = OrUsage(LoadProfile(path), "--profile");
  const std::vector<Day> active = ParseDayList(active_text, "--T");
  const RunOutcome o = OrUsage(RunGame(f, active), "--T");
  Json j;
  if (o.purchase_day) {
    j["purchase_day"] = *o.purchase_day;
  } else {
    j["purchase_day"] = nullptr;
  }
  j["costs"] = o.cost;
  j["opts"] = o.opt;
  Json ratios = Json::array();
  for (const ExactRatio& r : o.ratio) ratios.push_back(Fraction(r));
  j["ratios"] = ratios;
  Emit(j, g.json, out);
  return kOk;
}

int Experiment(ExperimentConfig cfg, const std::string& lambdas,
               const std::string& sigmas, std::string out_path,
               const Globals& g, std::ostream& out) {
  cfg.lambdas = ParseRatioList(lambdas, "--lambdas");
  cfg.sigmas = ParseSigmaList(sigmas);
  if (out_path.empty()) {
    const char* dir = std::getenv(kRunsDirEnv);
    out_path = absl::StrCat(dir != nullptr && *dir != '\0' ? dir : "runs",
                            "/eq_", cfg.r, "_", cfg.w, ".csv");
  }
  const std::vector<ExperimentRow> rows =
      OrUsage(RunExperiment(cfg), "experiment");
  const std::filesystem::path parent =
      std::filesystem::path(out_path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  if (ec) {
    throw UsageError{absl::StrCat("--out: cannot create ", parent.string(),
                                  ": ", ec.message())};
  }
  if (absl::Status s = WriteCsv(rows, out_path); !s.ok()) {
    throw UsageError{absl::StrCat("--out: ", s.message())};
  }
  Json j;
  j["out"] = out_path;
  j["rows"] = rows.size();
  Emit(j, g.json, out);
  return kOk;
}

// Compares the closed form with the brute-force oracle, on one schedule or
// on `count` random ones.
int OracleDiff(const std::string& path, Dollars b, Day h, int count,
               std::uint64_t seed, const Globals& g, std::ostream& out) {
  std::vector<PriceSchedule> schedules;
  if (!path.empty()) {
    schedules.push_back(OrUsage(LoadSchedule(path), "--schedule"));
  } else {
    if (b < 2 || h < 1 || count < 1) {
      throw UsageError{
          "oracle-diff: need --schedule, or --B >= 2, --H >= 1 "
          "and --count >= 1"};
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Dollars> price(0, b);
    std::uniform_int_distribution<int> zero_odds(0, 19);
    for (int k = 0; k < count; ++k) {
      std::vector<Dollars> prices(static_cast<size_t>(h));
      for (Dollars& v : prices) {
        v = price(rng);
        // Keep free days rare so most schedules run to the horizon.
        while (v == 0 && zero_odds(rng) != 0) v = price(rng);
      }
      schedules.push_back(
          OrUsage(PriceSchedule::Create(b, h, prices), "oracle-diff"));
    }
  }
  int mismatches = 0;
  Json examples = Json::array();
  for (const PriceSchedule& p : schedules) {
    const SolveResult r = skirental::Solve(p);
    const Day bound = std::max(p.horizon(), 3 * p.license_cost());
    const SolveResult o = OrUsage(OracleCOpt(p, bound), "oracle-diff");
    if (o.c_opt == r.c_opt && o.optimal_buy_days == r.optimal_buy_days) {
      continue;
    }
    ++mismatches;
    if (examples.size() < 5) examples.push_back(Json::parse(ScheduleToJson(p)));
  }
  Json j;
  j["schedules"] = schedules.size();
  j["mismatches"] = mismatches;
  if (mismatches > 0) j["examples"] = examples;
  Emit(j, g.json, out);
  return mismatches == 0 ? kOk : kOracleDisagreement;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Multiagent ski rental: solvers, equilibrium checks and "
      "prediction experiments",
      "skirental"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print one JSON object");

  std::string schedule;
  std::string profile;
  std::string spec;
  std::string lambda = "1";
  bool oracle = false;
  Dollars b = 0;
  int n_agents = 0;
  Day r = 0;
  Dollars w = 0;
  Day active = 0;
  Day predicted = 0;
  Day r_min = 1;
  Day r_max = 0;

  CLI::App* solve =
      app.add_subcommand("solve", "Optimal strategy for a schedule");
  solve->add_option("--schedule", schedule, "Schedule JSON file")->required();
  solve->add_flag("--oracle", oracle, "Cross-check with brute force");

  CLI::App* check = app.add_subcommand("check-eq", "Verify an equilibrium");
  auto* profile_opt =
      check->add_option("--profile", profile, "Pledge profile JSON file");
  auto* spec_opt =
      check->add_option("--spec", spec, "Coalition r:w1,w2,... (or r,w1,...)");
  profile_opt->excludes(spec_opt);
  check->add_option("--B", b, "License cost (with --spec)");
  auto* n_opt = check->add_option("--n", n_agents,
                                  "Number of agents (with --spec; default: "
                                  "number of pledges)");
  check->add_flag("--oracle", oracle, "Cross-check with the deviation oracle");

  CLI::App* enumerate =
      app.add_subcommand("enumerate-eq", "List coalition equilibria");
  enumerate->add_option("--B", b, "License cost")->required();
  enumerate->add_option("--n", n_agents, "Number of agents")->required();
  enumerate->add_option("--r-min", r_min, "First purchase day");
  enumerate->add_option("--r-max", r_max, "Last purchase day (default 2B-1)");

  CLI::App* beta = app.add_subcommand(
      "beta-table", "Consistency bound of the prediction algorithm");
  beta->add_option("--B", b, "License cost")->required();
  beta->add_option("--r", r, "Purchase day")->required();
  beta->add_option("--w", w, "Pledge")->required();
  beta->add_option("--lambda", lambda, "Trust parameter in (0, 1]")->required();

  CLI::App* alg1 =
      app.add_subcommand("alg1", "Run the prediction algorithm once");
  alg1->add_option("--schedule", schedule, "Schedule JSON file")->required();
  alg1->add_option("--lambda", lambda, "Trust parameter in (0, 1]")->required();
  alg1->add_option("--T", active, "Actual active days")->required();
  alg1->add_option("--That", predicted, "Predicted active days")->required();

  std::string active_list;
  CLI::App* simulate = app.add_subcommand("simulate", "Play a pledge profile");
  simulate->add_option("--profile", profile, "Pledge profile JSON file")
      ->required();
  simulate->add_option("--T", active_list, "Active days per agent, e.g. 75,75")
      ->required();

  ExperimentConfig cfg;
  std::string lambdas = "0.2,1";
  std::string sigmas;
  std::string out_path;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Monte-Carlo ratio versus noise");
  experiment->add_option("--B", cfg.license_cost, "License cost")
      ->capture_default_str();
  experiment->add_option("--r", cfg.r, "Purchase day")->required();
  experiment->add_option("--w", cfg.w, "Pledge")->required();
  experiment->add_option("--lambdas", lambdas, "Comma-separated lambdas");
  experiment
      ->add_option("--sigmas", sigmas,
                   "Comma-separated sigmas; '0,25,...,250' expands")
      ->required();
  experiment->add_option("--samples", cfg.samples, "Samples per cell");
  experiment->add_option("--seed", cfg.seed, "Master seed");
  experiment->add_option("--threads", cfg.threads, "Worker threads");
  experiment->add_option(
      "--out", out_path,
      absl::StrCat("CSV path (default $", kRunsDirEnv, "/eq_R_W.csv)"));

  Dollars diff_b = 0;
  Day diff_h = 0;
  int diff_count = 0;
  std::uint64_t diff_seed = 1;
  CLI::App* diff = app.add_subcommand(
      "oracle-diff", "Closed form versus brute force on schedules");
  diff->add_option("--schedule", schedule, "Schedule JSON file");
  diff->add_option("--B", diff_b, "License cost for random schedules");
  diff->add_option("--H", diff_h, "Horizon for random schedules");
  diff->add_option("--count", diff_count, "Number of random schedules");
  diff->add_option("--seed", diff_seed, "Seed for random schedules");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub =
        app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsageError;
  }

  try {
    if (solve->parsed()) return Solve(schedule, oracle, g, out);
    if (check->parsed()) {
      if (!profile.empty()) return CheckProfile(profile, oracle, g, out);
      if (spec.empty()) throw UsageError{"check-eq: need --profile or --spec"};
      if (b < 2) throw UsageError{"--B: required with --spec, must be >= 2"};
      std::optional<int> n;
      if (n_opt->count() > 0) n = n_agents;
      return CheckSpec(spec, b, n, oracle, g, out);
    }
    if (enumerate->parsed()) {
      return EnumerateEq(b, n_agents, r_min, r_max > 0 ? r_max : 2 * b - 1, g,
                         out);
    }
    if (beta->parsed()) return BetaTableCmd(b, r, w, lambda, g, out);
    if (alg1->parsed()) {
      return Alg1Cmd(schedule, lambda, active, predicted, g, out);
    }
    if (simulate->parsed()) return Simulate(profile, active_list, g, out);
    if (experiment->parsed()) {
      return Experiment(cfg, lambdas, sigmas, out_path, g, out);
    }
    if (diff->parsed()) {
      return OracleDiff(schedule, diff_b, diff_h, diff_count, diff_seed, g,
                        out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace skirental::cli
