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

// Multiagent ski rental. Each active agent rents for 1 per day; on any day
// the agents may pledge toward a shared license of cost B. The first day the
// pledges of still-active agents reach B, the license is bought, pledgers pay
// what they pledged (overpledging included), and the resource is free for
// everyone still active. Pledges that fall short are nullified.

#ifndef SKIRENTAL_GAME_H_
#define SKIRENTAL_GAME_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "skirental/price_schedule.h"
#include "skirental/rational.h"

namespace skirental {

using AgentId = int;  // 0-based

struct GameConfig {
  int n = 1;
  Dollars license_cost = 2;  // B
  Day horizon = 1;           // H; pledges live on days 1..H

  absl::Status Validate() const;
};

// Fixed pledge tables f_i(t), one per agent; zero wherever not set.
class PledgeProfile {
 public:
  static absl::StatusOr<PledgeProfile> Create(const GameConfig& cfg);

  const GameConfig& config() const { return cfg_; }

  absl::Status Set(AgentId agent, Day day, Dollars amount);

  // Zero outside 1..H.
  Dollars pledge(AgentId agent, Day day) const {
    if (day < 1 || day > cfg_.horizon) return 0;
    return table_[static_cast<size_t>(agent) * cfg_.horizon + (day - 1)];
  }

  // Sum over all agents, and over all agents but `excluded`.
  Dollars Total(Day day) const;
  Dollars TotalExcept(AgentId excluded, Day day) const;

  // First day on which everyone's pledges reach B, assuming all agents stay
  // active.
  std::optional<Day> PurchaseDay() const;

 private:
  explicit PledgeProfile(const GameConfig& cfg)
      : cfg_(cfg), table_(static_cast<size_t>(cfg.n) * cfg.horizon, 0) {}

  GameConfig cfg_;
  std::vector<Dollars> table_;
};

struct RunOutcome {
  std::optional<Day> purchase_day;
  std::vector<Dollars> cost;
  std::vector<Dollars> opt;
  std::vector<ExactRatio> ratio;
  // Set where the agent paid while its optimum was free; ratio then holds
  // the cost.
  std::vector<bool> unbounded;
};

// Plays the profile against actual active times (agent i active on days
// 1..active_days[i]). Each agent's optimum is taken over its induced
// schedule.
absl::StatusOr<RunOutcome> RunGame(const PledgeProfile& f,
                                   std::span<const Day> active_days);

// The single-agent schedule agent i faces when the others' pledges are
// fixed: p_j = max(B - sum_{k != i} f_k(j), 0), cut at the first free day.
PriceSchedule InducedPrices(const PledgeProfile& f, AgentId agent);

// min over 1 <= k <= B of k - 1 + max(B - sum_{j != i} f_j(k), 0).
Dollars ZValue(const PledgeProfile& f, AgentId agent);

}  // namespace skirental

#endif  // SKIRENTAL_GAME_H_
