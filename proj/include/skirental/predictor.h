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

// The lambda-tunable ski rental algorithm with a self-prediction That of the
// agent's own active time.
//
// lambda = 1 reproduces the optimal predictionless strategy; smaller lambda
// trusts the prediction more. When That >= M_That(p) the algorithm buys on
// r2 (a cheap day at or after a lambda-weighted point between r0 - 1 and the
// optimal day r1), otherwise on r3 (the day with the smallest P_t / t among
// days whose ratio stays within the robustness bound). Either way it never
// buys once its actual active time has ended.

#ifndef SKIRENTAL_PREDICTOR_H_
#define SKIRENTAL_PREDICTOR_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "skirental/price_schedule.h"
#include "skirental/rational.h"

namespace skirental {

struct AlgParams {
  ExactRatio lambda = 1;

  // 0 < lambda <= 1.
  static absl::StatusOr<AlgParams> Create(ExactRatio lambda);
};

enum class Branch { kPredictionLarge, kPredictionSmall };

absl::string_view BranchName(Branch b);

struct AlgDecision {
  Day i_star = 0;
  Day r0 = 0;
  Day r1 = 0;
  Day r2 = 0;
  Day r3 = 0;

  friend bool operator==(const AlgDecision&, const AlgDecision&) = default;
};

struct PredictionOutcome {
  AlgDecision days;
  Branch branch = Branch::kPredictionLarge;
  std::optional<Day> buy_day_taken;
  Dollars cost = 0;
  Dollars opt = 0;
  ExactRatio ratio;
};

// r0: the first day reaching M_*(p), or M_*(p) + 1 when that day is free.
Day StartDay(const DerivedCosts& costs);

// M_That(p) = min{P_i : 1 <= i <= That}; the branch test is That >= this.
Dollars PredictionThreshold(const DerivedCosts& costs, Day predicted);

// Precomputes the decision days for one schedule so many (T, That) pairs
// can be evaluated cheaply.
class PredictionAlgorithm {
 public:
  PredictionAlgorithm(const PriceSchedule& p, AlgParams params);

  const AlgDecision& decision() const { return decision_; }
  const DerivedCosts& costs() const { return costs_; }
  const AlgParams& params() const { return params_; }
  const ExactRatio& c_opt() const { return c_opt_; }

  // Requires active >= 1 and predicted >= 1.
  PredictionOutcome Run(Day active, Day predicted) const;

 private:
  AlgParams params_;
  DerivedCosts costs_;
  ExactRatio c_opt_;
  AlgDecision decision_;
};

AlgDecision ComputeDays(const PriceSchedule& p, const AlgParams& params);

absl::StatusOr<PredictionOutcome> RunPrediction(const PriceSchedule& p,
                                                const AlgParams& params,
                                                Day active, Day predicted);

// Robustness guarantee: lambda - 1 + c_OPT(p) / lambda.
ExactRatio RobustnessBound(const PriceSchedule& p, const AlgParams& params);
ExactRatio RobustnessBound(const ExactRatio& c_opt, const AlgParams& params);

// Closed forms for the schedule a coalition member with pledge w on day r
// faces (p_r = w, B elsewhere).
struct ClosedFormDays {
  Dollars m_star = 0;
  ExactRatio c_opt;
  Day r1 = 0;
  Day r2 = 0;
  std::optional<Day> r3;  // absent where no closed form is available
};

ClosedFormDays EquilibriumClosedForm(Day r, Dollars w, Dollars license_cost,
                                     const ExactRatio& lambda);

enum class BetaRow {
  kFirstDayUnit,    // r = 1, beta = 1
  kFirstDayPledge,  // r = 1, beta = w
  kEarlyMax,        // 2 <= r <= M_*, beta = 1 + max((ceil(lr)-1)/B, (w-1)/r)
  kEarlyCeil,       // 2 <= r <= M_*, beta = 1 + (ceil(lr)-1)/B
  kEarlyPledge,     // 2 <= r <= M_*, beta = 1 + (w-1)/r
  kEarlyUnit,       // 2 <= r <= M_*, beta = 1
  kLateCeil,        // M_* < r, ceil(lr) branch
  kLateFull,        // M_* < r, beta = (r+w-1)/B
  kEarlyUncovered,  // 2 <= r <= M_*, no table row applies
};

absl::string_view BetaRowName(BetaRow row);

struct BetaResult {
  ExactRatio beta;
  BetaRow row = BetaRow::kEarlyUncovered;
  // Every row condition evaluated, in table order, as (label, holds).
  std::vector<std::pair<std::string, bool>> conditions_evaluated;
  // Rows past the first whose conditions also held.
  std::vector<BetaRow> also_matched;
  Dollars m_star = 0;
};

// Consistency guarantee of the algorithm on the (r, w) coalition schedule.
// Rejects (r, w) that are not coalition equilibria.
absl::StatusOr<BetaResult> BetaTable(Day r, Dollars w, Dollars license_cost,
                                     const ExactRatio& lambda);

// M_*(p) (w - 1) / (r (B - 1)): below it the consistency guarantee beats
// the predictionless ratio 1 + (w - 1) / r.
absl::StatusOr<ExactRatio> ImprovementThreshold(Day r, Dollars w,
                                                Dollars license_cost);

// Max over T in [1, max_active] of the realized ratio with That = T.
absl::StatusOr<ExactRatio> EmpiricalConsistency(Day r, Dollars w,
                                                Dollars license_cost,
                                                const ExactRatio& lambda,
                                                Day max_active = 0);

}  // namespace skirental

#endif  // SKIRENTAL_PREDICTOR_H_
