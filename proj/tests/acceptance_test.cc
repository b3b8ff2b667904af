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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every comparison is exact except the pinned statistical
// thresholds of criterion 7.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "skirental/equilibria.h"
#include "skirental/experiments.h"
#include "skirental/game.h"
#include "skirental/predictor.h"
#include "skirental/price_schedule.h"
#include "skirental/rational.h"
#include "skirental/varying_price.h"

namespace skirental {
namespace {

// Criterion 1: (B, H) cells are enumerated exhaustively while B^H stays
// within this many schedules.
constexpr std::int64_t kExhaustiveCap = 4'000'000;
constexpr int kRandomSchedules = 10'000;
// Criterion 7 thresholds.
constexpr double kMaxAverageRatio = 1.05;
constexpr int kMaxSuboptimal = 100;
constexpr int kSamplesPerCell = 1000;
constexpr std::uint64_t kMasterSeed = 20260101;

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::vector<ExactRatio> LambdaGrid() {
  std::vector<ExactRatio> out;
  for (int k = 1; k <= 10; ++k) out.emplace_back(k, 10);
  return out;
}

// 1. Closed form equals the brute-force oracle, argmin sets included.
Verdict OracleEquivalence() {
  Verdict v;
  std::int64_t checked = 0;
  std::vector<std::string> partial;
  auto check = [&](Dollars b, Day h, const std::vector<Dollars>& prices) {
    const PriceSchedule p = *PriceSchedule::Create(b, h, prices);
    const absl::StatusOr<SolveResult> oracle = OracleCOpt(p);
    ++checked;
    if (!oracle.ok() || !(Solve(p) == *oracle)) {
      if (v.pass) {
        v.detail = absl::StrCat("mismatch at B=", b, " H=", h, " ");
      }
      v.pass = false;
    }
  };
  std::vector<std::string> full;
  for (Dollars b = 2; b <= 8; ++b) {
    Day covered = 0;
    for (Day h = 1; h <= 2 * b + 2; ++h) {
      std::int64_t count = 1;
      for (Day i = 0; i < h && count <= kExhaustiveCap; ++i) count *= b;
      if (count > kExhaustiveCap) break;
      std::vector<Dollars> prices(h, 1);
      while (true) {
        check(b, h, prices);
        Day i = 0;
        while (i < h && prices[i] == b) prices[i++] = 1;
        if (i == h) break;
        ++prices[i];
      }
      covered = h;
    }
    full.push_back(absl::StrCat("B=", b, ":H<=", covered));
  }
  std::mt19937_64 rng(kMasterSeed);
  for (int k = 0; k < 2 * kRandomSchedules; ++k) {
    // The second batch also draws free days.
    const Dollars lo = k < kRandomSchedules ? 1 : 0;
    const Dollars b = std::uniform_int_distribution<Dollars>(2, 8)(rng);
    const Day h = std::uniform_int_distribution<Day>(1, 2 * b + 2)(rng);
    std::vector<Dollars> prices(h);
    for (Dollars& x : prices) {
      x = std::uniform_int_distribution<Dollars>(lo, b)(rng);
    }
    check(b, h, prices);
  }
  v.detail += absl::StrCat(checked, " schedules; exhaustive over {1..B} for ",
                           absl::StrJoin(full, " "), "; ", kRandomSchedules,
                           " random over {1..B} and ", kRandomSchedules,
                           " over {0..B} with H<=2B+2");
  return v;
}

// 2. Constant schedules and the (75, 70) schedule.
Verdict ClassicalSanity() {
  Verdict v;
  for (Dollars b = 2; b <= 200; ++b) {
    const SolveResult s = Solve(*PriceSchedule::Create(b, 1, {}));
    if (s.c_opt != ExactRatio(2 * b - 1, b)) {
      v.pass = false;
      v.detail = absl::StrCat("constant B=", b, " gives ",
                              FormatFraction(s.c_opt), "; ");
    }
  }
  const ExactRatio c = Solve(*PriceSchedule::SinglePledge(100, 75, 70)).c_opt;
  if (c != ExactRatio(48, 25)) v.pass = false;
  v.detail += absl::StrCat("constant B in [2,200] = (2B-1)/B; (75,70) c_OPT = ",
                           FormatFraction(c), " = ", FormatDecimal(c, 2));
  return v;
}

// Compositions of b into exactly k positive parts, lexicographic.
void Compositions(Dollars b, int k, std::vector<Dollars>& prefix,
                  std::vector<std::vector<Dollars>>& out) {
  if (k == 1) {
    prefix.push_back(b);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Dollars first = 1; first <= b - (k - 1); ++first) {
    prefix.push_back(first);
    Compositions(b - first, k - 1, prefix, out);
    prefix.pop_back();
  }
}

// 3. Coalition verdict equals "nobody can deviate profitably".
Verdict CoalitionOracle() {
  Verdict v;
  int checked = 0;
  int accepted = 0;
  for (Dollars b = 2; b <= 10; ++b) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= n && k <= b; ++k) {
        std::vector<std::vector<Dollars>> weights;
        std::vector<Dollars> prefix;
        Compositions(b, k, prefix, weights);
        for (Day r = 1; r <= 2 * b - 1; ++r) {
          for (const std::vector<Dollars>& w : weights) {
            EquilibriumSpec spec;
            spec.license_cost = b;
            spec.n = n;
            spec.r = r;
            spec.weights = w;
            const EqVerdict verdict = *CheckRationalNoSelfPred(spec);
            const Certificate cert = *CertifyProfile(*ToProfile(spec));
            ++checked;
            accepted += verdict.is_equilibrium;
            if (verdict.is_equilibrium != cert.certified) {
              if (v.pass) {
                v.detail =
                    absl::StrCat("disagree at B=", b, " n=", n, " r=", r, "; ");
              }
              v.pass = false;
            }
          }
        }
      }
    }
  }
  v.detail += absl::StrCat(checked, " specs (", accepted,
                           " equilibria), B<=10, n<=3, r<=2B-1");
  return v;
}

// 4. Predictionless verifier against the deviation oracle on profiles with
// every pledge on one day r.
Verdict PredictionlessOracle() {
  Verdict v;
  int checked = 0;
  int accepted = 0;
  int certified_only = 0;
  for (Dollars b = 2; b <= 6; ++b) {
    for (int n = 1; n <= 3; ++n) {
      for (Day r = 1; r <= 2 * b; ++r) {
        std::vector<Dollars> a(n, 0);
        while (true) {
          PledgeProfile f = *PledgeProfile::Create({n, b, 2 * b});
          for (AgentId i = 0; i < n; ++i) (void)f.Set(i, r, a[i]);
          const EqVerdict verdict = *CheckPredictionless(f);
          const Certificate cert = *CertifyProfile(f);
          ++checked;
          accepted += verdict.is_equilibrium;
          if (verdict.is_equilibrium != cert.certified) {
            if (verdict.is_equilibrium) {
              if (v.pass) {
                v.detail = absl::StrCat("accepted but not certified at B=", b,
                                        " n=", n, " r=", r, "; ");
              }
              v.pass = false;
            } else {
              ++certified_only;
            }
          }
          int i = 0;
          while (i < n && a[i] == b) a[i++] = 0;
          if (i == n) break;
          ++a[i];
        }
      }
    }
  }
  if (certified_only > 0) {
    v.pass = false;
    v.detail += absl::StrCat(certified_only,
                             " certified profiles rejected by the verifier; ");
  }
  v.detail += absl::StrCat(checked, " single-day profiles (", accepted,
                           " accepted), B<=6, n<=3, H=2B");
  return v;
}

// Days the consistency closed forms assume: minimizer of P from the lambda
// point (ties to the later day, fallback to r1) and the largest admissible
// day.
std::pair<Day, Day> TableDays(const PredictionAlgorithm& alg) {
  const DerivedCosts& c = alg.costs();
  const AlgDecision& d = alg.decision();
  const ExactRatio& lam = alg.params().lambda;
  const Day lo = Ceil((1 - lam) * (d.r0 - 1) + lam * d.r1);
  Day r2 = lo;
  for (Day t = lo; t <= std::max(lo, c.scan_limit); ++t) {
    if (c.P(t) <= c.P(r2)) r2 = t;
  }
  if (c.P(r2) > c.P(d.r1)) r2 = d.r1;
  const ExactRatio bound = RobustnessBound(alg.c_opt(), alg.params());
  Day r3 = 1;
  for (Day t = 1; t <= c.scan_limit; ++t) {
    if (ExactRatio(c.P(t), OptOffline(c, t)) <= bound) r3 = t;
  }
  const Day tail = Floor(bound * c.m_star) + 1 - c.license_cost;
  if (tail > c.scan_limit) r3 = tail;
  return {r2, r3};
}

// 5. Consistency against the table and robustness against the bound.
Verdict ConsistencyAndRobustness(std::string& info) {
  Verdict v;
  const Dollars b = 100;
  std::int64_t cells = 0;
  std::int64_t beta_violations = 0;
  std::int64_t bound_violations = 0;
  std::int64_t table_rule_violations = 0;
  std::string first;
  for (Day r = 1; r <= 2 * b - 1; ++r) {
    for (Dollars w = 1; w <= b; ++w) {
      if (!PledgerInequalityHolds(b, r, w)) continue;
      const PriceSchedule p = *PriceSchedule::SinglePledge(b, r, w);
      for (const ExactRatio& lam : LambdaGrid()) {
        ++cells;
        const PredictionAlgorithm alg(p, *AlgParams::Create(lam));
        const DerivedCosts& c = alg.costs();
        const ExactRatio beta = BetaTable(r, w, b, lam)->beta;
        const ExactRatio bound = RobustnessBound(alg.c_opt(), alg.params());
        const auto [r2, r3] = TableDays(alg);
        ExactRatio consistency(1);
        ExactRatio table_rule_ratio(1);
        for (Day t = 1; t <= 4 * b; ++t) {
          consistency = std::max(consistency, alg.Run(t, t).ratio);
          const Day buy = t >= c.PrefixMin(t) ? r2 : r3;
          const Dollars cost = buy <= t ? c.P(buy) : t;
          table_rule_ratio =
              std::max(table_rule_ratio, ExactRatio(cost, OptOffline(c, t)));
        }
        if (consistency > beta) {
          if (beta_violations++ == 0) {
            first = absl::StrCat("(r=", r, ",w=", w,
                                 ",lambda=", FormatFraction(lam), ") realized ",
                                 FormatFraction(consistency), " > beta ",
                                 FormatFraction(beta));
          }
        }
        if (table_rule_ratio > beta) ++table_rule_violations;
        for (Day t = 10; t <= 4 * b; t += 10) {
          for (Day that = 10; that <= 4 * b; that += 10) {
            if (alg.Run(t, that).ratio > bound) ++bound_violations;
          }
        }
      }
    }
  }
  v.pass = beta_violations == 0 && bound_violations == 0;
  v.detail = absl::StrCat(
      cells, " cells; consistency > beta in ", beta_violations, " cells",
      first.empty() ? "" : absl::StrCat(", first ", first),
      "; robustness bound broken on ", bound_violations, " (T, That) points");
  info = absl::StrCat(
      "INFO 5: with the day rules the table is derived from (largest "
      "admissible r3, r2 by P alone), consistency > beta in ",
      table_rule_violations, " of ", cells, " cells");
  return v;
}

// 6. Numbers quoted in the text.
Verdict SpotChecks() {
  Verdict v;
  const ExactRatio beta = BetaTable(75, 19, 100, ExactRatio(1))->beta;
  const bool inequality = 69 * std::min(100, 144) == 6900 && 6900 < 75 * 99 &&
                          PledgerInequalityHolds(100, 75, 70);
  const ExactRatio threshold = *ImprovementThreshold(75, 70, 100);
  v.pass = beta == ExactRatio(31, 25) && inequality &&
           threshold == ExactRatio(92, 99);
  v.detail = absl::StrCat(
      "beta(75,19,1) = ", FormatFraction(beta),
      "; (75,70) pledger inequality 6900 <= 7425 ",
      inequality ? "holds" : "fails",
      "; improvement threshold(75,70) = ", FormatFraction(threshold));
  return v;
}

ExperimentConfig Experiment(Day r, Dollars w, std::vector<double> sigmas) {
  ExperimentConfig c;
  c.r = r;
  c.w = w;
  c.sigmas = std::move(sigmas);
  c.samples = kSamplesPerCell;
  c.seed = kMasterSeed;
  c.threads = 4;
  return c;
}

std::vector<double> SigmaGrid() {
  std::vector<double> out;
  for (int s = 0; s <= 250; s += 25) out.push_back(s);
  return out;
}

// 7. The experiment shapes.
Verdict ExperimentReproduction() {
  Verdict v;
  std::vector<std::string> notes;
  Timer timer;
  absl::StatusOr<std::vector<ExperimentRow>> nearly =
      RunExperiment(Experiment(75, 19, SigmaGrid()));
  if (!nearly.ok()) {
    return {false, absl::StrCat("(75,19): ", nearly.status().message())};
  }
  double worst_avg = 0;
  for (const ExperimentRow& row : *nearly) {
    worst_avg = std::max(worst_avg, row.avg_ratio);
    if (row.avg_ratio > kMaxAverageRatio) v.pass = false;
    if (row.sigma == 250) {
      if (row.n_suboptimal >= kMaxSuboptimal) v.pass = false;
      notes.push_back(absl::StrCat(
          "suboptimal at sigma=250, lambda=", FormatFraction(row.lambda), ": ",
          row.n_suboptimal));
    }
  }
  notes.push_back(absl::StrFormat("(75,19) max avg %.6f in %.1fs", worst_avg,
                                  timer.Seconds()));
  absl::StatusOr<std::vector<ExperimentRow>> costly =
      RunExperiment(Experiment(75, 70, {0}));
  if (!costly.ok() || costly->size() != 2) {
    return {false, "(75,70) run failed"};
  }
  const double small = (*costly)[0].avg_ratio;
  const double one = (*costly)[1].avg_ratio;
  if (!(small < one)) v.pass = false;
  notes.push_back(
      absl::StrFormat("(75,70) sigma=0 avg %.6f (lambda=1/5) vs "
                      "%.6f (lambda=1)",
                      small, one));
  for (const auto& [r, w] : {std::pair<Day, Dollars>{125, 15}, {125, 75}}) {
    Timer t;
    absl::StatusOr<std::vector<ExperimentRow>> rows =
        RunExperiment(Experiment(r, w, SigmaGrid()));
    if (!rows.ok()) {
      v.pass = false;
      notes.push_back(
          absl::StrCat("(", r, ",", w, ") failed: ", rows.status().message()));
    } else {
      notes.push_back(
          absl::StrFormat("(%d,%d) complete within the bound in "
                          "%.1fs",
                          r, w, t.Seconds()));
    }
  }
  v.detail = absl::StrJoin(notes, "; ");
  return v;
}

std::string ReadBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 8. Same seed, same bytes, whatever the thread count.
Verdict Determinism() {
  Verdict v;
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "skirental_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  for (int threads : {1, 1, 4, 8}) {
    ExperimentConfig c = Experiment(75, 70, SigmaGrid());
    c.samples = 200;
    c.threads = threads;
    const std::filesystem::path path =
        dir / absl::StrCat("run_", files.size(), "_t", threads, ".csv");
    absl::StatusOr<std::vector<ExperimentRow>> rows = RunExperiment(c);
    if (!rows.ok() || !WriteCsv(*rows, path.string()).ok()) {
      return {false, "experiment failed"};
    }
    files.push_back(ReadBytes(path));
  }
  for (const std::string& f : files) {
    if (f != files.front() || f.empty()) v.pass = false;
  }
  v.detail = absl::StrCat("4 CSV runs (threads 1, 1, 4, 8) ",
                          v.pass ? "byte-identical" : "differ", ", ",
                          files.front().size(), " bytes each");
  return v;
}

int Main() {
  struct Criterion {
    int id;
    const char* name;
    Verdict (*run)();
  };
  std::string info;
  bool all = true;
  auto report = [&](int id, const char* name, const Verdict& v, double s) {
    all &= v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " ("
              << name << ", " << absl::StrFormat("%.1fs", s)
              << "): " << v.detail << std::endl;
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence", OracleEquivalence},
      {2, "classical sanity", ClassicalSanity},
      {3, "coalition verdict vs deviation oracle", CoalitionOracle},
      {4, "predictionless verifier vs deviation oracle", PredictionlessOracle},
  };
  for (const Criterion& c : criteria) {
    Timer t;
    const Verdict v = c.run();
    report(c.id, c.name, v, t.Seconds());
  }
  {
    Timer t;
    const Verdict v = ConsistencyAndRobustness(info);
    report(5, "consistency table and robustness bound", v, t.Seconds());
    std::cout << info << std::endl;
  }
  const Criterion rest[] = {
      {6, "spot checks", SpotChecks},
      {7, "experiment reproduction", ExperimentReproduction},
      {8, "determinism", Determinism},
  };
  for (const Criterion& c : rest) {
    Timer t;
    const Verdict v = c.run();
    report(c.id, c.name, v, t.Seconds());
  }
  return all ? 0 : 1;
}

}  // namespace
}  // namespace skirental

int main() { return skirental::Main(); }
