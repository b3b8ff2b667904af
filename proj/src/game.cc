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

#include "skirental/game.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace skirental {

absl::Status GameConfig::Validate() const {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least one agent, got n=", n));
  }
  if (license_cost < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("license cost B must be >= 2, got ", license_cost));
  }
  if (horizon < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("horizon H must be >= 1, got ", horizon));
  }
  return absl::OkStatus();
}

absl::StatusOr<PledgeProfile> PledgeProfile::Create(const GameConfig& cfg) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  return PledgeProfile(cfg);
}

absl::Status PledgeProfile::Set(AgentId agent, Day day, Dollars amount) {
  if (agent < 0 || agent >= cfg_.n) {
    return absl::InvalidArgumentError(
        absl::StrCat("agent ", agent, " outside [0, ", cfg_.n, ")"));
  }
  if (day < 1 || day > cfg_.horizon) {
    return absl::InvalidArgumentError(
        absl::StrCat("pledge day ", day, " outside [1, ", cfg_.horizon, "]"));
  }
  if (amount < 0 || amount > cfg_.license_cost) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pledge ", amount, " outside [0, ", cfg_.license_cost, "]"));
  }
  table_[static_cast<size_t>(agent) * cfg_.horizon + (day - 1)] = amount;
  return absl::OkStatus();
}

Dollars PledgeProfile::Total(Day day) const {
  Dollars sum = 0;
  for (AgentId a = 0; a < cfg_.n; ++a) sum += pledge(a, day);
  return sum;
}

Dollars PledgeProfile::TotalExcept(AgentId excluded, Day day) const {
  return Total(day) - pledge(excluded, day);
}

std::optional<Day> PledgeProfile::PurchaseDay() const {
  for (Day d = 1; d <= cfg_.horizon; ++d) {
    if (Total(d) >= cfg_.license_cost) return d;
  }
  return std::nullopt;
}

absl::StatusOr<RunOutcome> RunGame(const PledgeProfile& f,
                                   std::span<const Day> active_days) {
  const GameConfig& cfg = f.config();
  if (static_cast<int>(active_days.size()) != cfg.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "got ", active_days.size(), " active times for ", cfg.n, " agents"));
  }
  for (Day t : active_days) {
    if (t < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("active times must be >= 1, got ", t));
    }
  }
  RunOutcome out;
  for (Day d = 1; d <= cfg.horizon && !out.purchase_day; ++d) {
    Dollars sum = 0;
    for (AgentId a = 0; a < cfg.n; ++a) {
      if (active_days[a] >= d) sum += f.pledge(a, d);
    }
    if (sum >= cfg.license_cost) out.purchase_day = d;
  }
  for (AgentId a = 0; a < cfg.n; ++a) {
    const Day t = active_days[a];
    Dollars cost = t;
    if (out.purchase_day && t >= *out.purchase_day) {
      cost = *out.purchase_day - 1 + f.pledge(a, *out.purchase_day);
    }
    const Dollars opt = OptOffline(InducedPrices(f, a), t);
    out.cost.push_back(cost);
    out.opt.push_back(opt);
    // OPT is zero when the others cover B on day 1.
    out.unbounded.push_back(opt == 0 && cost > 0);
    out.ratio.push_back(opt == 0 ? ExactRatio(std::max<Dollars>(cost, 1))
                                 : ExactRatio(cost, opt));
  }
  return out;
}

PriceSchedule InducedPrices(const PledgeProfile& f, AgentId agent) {
  const GameConfig& cfg = f.config();
  std::vector<Dollars> prices(cfg.horizon);
  for (Day d = 1; d <= cfg.horizon; ++d) {
    prices[d - 1] =
        std::max<Dollars>(cfg.license_cost - f.TotalExcept(agent, d), 0);
  }
  // Prices are in [0, B] by construction.
  return *PriceSchedule::Create(cfg.license_cost, cfg.horizon,
                                std::move(prices));
}

Dollars ZValue(const PledgeProfile& f, AgentId agent) {
  const Dollars b = f.config().license_cost;
  Dollars best = b;  // k = 1 contributes at most B.
  for (Day k = 1; k <= b; ++k) {
    best = std::min(best,
                    k - 1 + std::max<Dollars>(b - f.TotalExcept(agent, k), 0));
  }
  return best;
}

}  // namespace skirental
