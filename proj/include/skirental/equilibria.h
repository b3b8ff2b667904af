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

// Equilibrium verifiers for multiagent ski rental.
//
// Three notions are covered:
//  * predictionless competitive ratio equilibria over fixed pledge tables
//    (CheckPredictionless),
//  * equilibria of rational agents that know what the others pledge but not
//    their own active time (CheckRationalNoSelfPred), and
//  * single runs of equilibria with self-predictions, parameterized by
//    per-agent robustness bounds (CheckPredictionEqRun).
//
// The deviation oracle is independent of all three: it reduces each agent's
// problem to its induced varying-price schedule and brute-forces the best
// response with OracleCOpt.

#ifndef SKIRENTAL_EQUILIBRIA_H_
#define SKIRENTAL_EQUILIBRIA_H_

#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "skirental/game.h"
#include "skirental/price_schedule.h"
#include "skirental/rational.h"
#include "skirental/varying_price.h"

namespace skirental {

enum class EqCondition {
  kPurchase,           // (i): license bought, at exactly B
  kFreeDay,            // (ii)
  kBargainDay,         // (iii)
  kOtherDays,          // (iv)
  kPledgerInequality,  // a coalition member's inequality
};

absl::string_view ConditionTag(EqCondition c);

enum class AgentRole { kFreeDay, kBargainDay, kGeneral, kPledger, kFreerider };

absl::string_view RoleName(AgentRole r);

struct EqVerdict {
  bool is_equilibrium = false;
  std::optional<EqCondition> failing_condition;
  std::optional<AgentId> failing_agent;
  std::optional<Day> purchase_day;
  std::vector<AgentRole> roles;
  // Per-agent competitive ratio from the closed forms. Empty when the
  // license is never bought.
  std::vector<ExactRatio> ratios;
};

// Predictionless profiles. Requires H >= 2B.
absl::StatusOr<EqVerdict> CheckPredictionless(const PledgeProfile& f);

// Closed-form ratios of an accepted predictionless equilibrium: 1 for
// free-day and bargain-day agents, (f_i(r) + r - 1) / min(r, Z_i) otherwise.
absl::StatusOr<std::vector<ExactRatio>> PredictionlessRatios(
    const PledgeProfile& f, const EqVerdict& verdict);

// A coalition buying on day r. Agents pledgers[k] pledge weights[k]; the
// remaining agents free-ride.
struct EquilibriumSpec {
  Dollars license_cost = 2;
  int n = 1;
  Day r = 1;
  std::vector<Dollars> weights;
  std::vector<AgentId> pledgers;  // empty means 0, 1, ..., weights.size()-1

  std::vector<AgentId> PledgerIds() const;
};

absl::StatusOr<EqVerdict> CheckRationalNoSelfPred(const EquilibriumSpec& spec);

// The inequality a single coalition member with pledge w must satisfy, for
// 1 <= r <= 2B - 1.
bool PledgerInequalityHolds(Dollars license_cost, Day r, Dollars w);

// The explicit pledge tables realizing `spec`. Horizon defaults to 2B.
absl::StatusOr<PledgeProfile> ToProfile(const EquilibriumSpec& spec,
                                        Day horizon = 0);

struct EnumerationOptions {
  Dollars max_license_cost = 20;
  size_t max_specs = 1'000'000;
};

// Every accepted coalition on days r_min..r_max (clipped to [1, 2B - 1]),
// over ordered compositions of B into at most n parts. Ordered by r, then
// lexicographically by weights.
absl::StatusOr<std::vector<EquilibriumSpec>> EnumerateRationalEq(
    Dollars license_cost, int n, Day r_min, Day r_max,
    const EnumerationOptions& options = {});

// Worst ratio agent i actually gets from its pledge table, the others'
// tables held fixed and everyone else outlasting the purchase day.
WorstRatio CurrentRatio(const PledgeProfile& f, AgentId agent);

// Best worst-case ratio any deviation of agent i can reach.
absl::StatusOr<ExactRatio> DeviationOracle(const PledgeProfile& f,
                                           AgentId agent,
                                           Day horizon_bound = 0);

struct Certificate {
  bool certified = false;
  std::vector<WorstRatio> current;
  std::vector<ExactRatio> best_deviation;
};

// Certified iff no agent can strictly improve its worst-case ratio.
absl::StatusOr<Certificate> CertifyProfile(const PledgeProfile& f,
                                           Day horizon_bound = 0);

// Robustness parameter per pledger; nullopt stands for infinity.
using Robustness = std::optional<ExactRatio>;

// One run of an equilibrium with predictions: the coalition pledges at least
// B in total on day r. `m_star` overrides M_*(p) for every pledger; by default
// each pledger uses min(B, r - 1 + w_k).
absl::StatusOr<EqVerdict> CheckPredictionEqRun(
    const EquilibriumSpec& spec, const std::vector<Robustness>& lambdas,
    std::optional<Dollars> m_star = std::nullopt);

// Latest day by which some agent with finite robustness must have bought:
// M_*(p) (1/lambda - 1) + M_*(p) lambda c_OPT(p), at the smallest lambda.
absl::StatusOr<ExactRatio> PurchaseDeadlineBound(
    const std::vector<Robustness>& lambdas, const PriceSchedule& p);

// A predictionless equilibrium read as an equilibrium with predictions:
// robustness and consistency both equal each agent's ratio.
std::vector<std::pair<ExactRatio, ExactRatio>> AsPredictionParameters(
    const EqVerdict& verdict);

}  // namespace skirental

#endif  // SKIRENTAL_EQUILIBRIA_H_
