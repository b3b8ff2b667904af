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

// Optimal deterministic strategies for ski rental with known varying prices.
//
// A deterministic strategy is "rent until day d - 1, then buy on day d". On
// a schedule with a free day f, buying on f costs nothing, so d = f doubles
// as "wait for the free day". Without a free day there is one more strategy,
// never buying, whose worst ratio diverges.
//
// Solve() is the closed-form characterization; OracleCOpt() enumerates every
// strategy against every adversarial active time and is the reference that
// Solve() is tested against.

#ifndef SKIRENTAL_VARYING_PRICE_H_
#define SKIRENTAL_VARYING_PRICE_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "skirental/price_schedule.h"
#include "skirental/rational.h"

namespace skirental {

enum class WitnessCase { kFreeDay, kBargainDay, kGeneral };

absl::string_view WitnessCaseName(WitnessCase c);

struct SolveResult {
  ExactRatio c_opt;
  // Every buy day achieving c_opt, ascending. The first entry is the
  // canonical strategy.
  std::vector<Day> optimal_buy_days;
  bool one_competitive = false;
  WitnessCase witness_case = WitnessCase::kGeneral;
  // Set when a bargain day on M_* is followed by a free day on M_* + 1:
  // renting through to the free day is also 1-competitive.
  std::optional<Day> alternative_wait_day;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

SolveResult Solve(const PriceSchedule& p);
SolveResult Solve(const DerivedCosts& costs);

struct WorstRatio {
  // Sup over active times of cost / OPT. When `divergent`, this is only the
  // value reached at the scan bound, or the cost paid where OPT is zero.
  ExactRatio ratio;
  Day worst_active_days = 0;
  bool divergent = false;
};

// Worst ratio of "buy on `buy_day`" (or never, if absent) over every active
// time T in [1, scan_limit + B]. Fails when the day does not exist.
absl::StatusOr<WorstRatio> StrategyWorstRatio(const PriceSchedule& p,
                                              std::optional<Day> buy_day);

// As above, but the buyer pays `paid` on `buy_day` rather than p_{buy_day}.
// Covers agents that overpledge in the multiagent game.
WorstRatio WorstRatioPaying(const DerivedCosts& costs, Day buy_day,
                            Dollars paid);

// Never buying on a schedule without a free day; always `divergent`.
WorstRatio NeverBuyWorstRatio(const DerivedCosts& costs);

// Brute force over every strategy. Rejects horizons above `horizon_bound`
// (0 means the default of 3B).
absl::StatusOr<SolveResult> OracleCOpt(const PriceSchedule& p,
                                       Day horizon_bound = 0);

}  // namespace skirental

#endif  // SKIRENTAL_VARYING_PRICE_H_
