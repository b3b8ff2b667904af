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

#include "skirental/price_schedule.h"

#include <algorithm>
#include <cassert>

#include "absl/strings/str_cat.h"

namespace skirental {

absl::StatusOr<PriceSchedule> PriceSchedule::Create(
    Dollars license_cost, Day horizon, std::vector<Dollars> prices) {
  if (license_cost < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("license cost B must be >= 2, got ", license_cost));
  }
  if (horizon < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("horizon H must be >= 1, got ", horizon));
  }
  if (static_cast<Day>(prices.size()) > horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        prices.size(), " explicit prices exceed horizon ", horizon));
  }
  std::optional<Day> free_day;
  for (size_t i = 0; i < prices.size(); ++i) {
    if (prices[i] < 0 || prices[i] > license_cost) {
      return absl::InvalidArgumentError(
          absl::StrCat("price on day ", i + 1, " is ", prices[i],
                       ", outside [0, ", license_cost, "]"));
    }
    if (prices[i] == 0) {
      free_day = static_cast<Day>(i + 1);
      prices.resize(i + 1);
      break;
    }
  }
  // Trailing B entries are implicit.
  while (!prices.empty() && prices.back() == license_cost) prices.pop_back();
  return PriceSchedule(license_cost, horizon, std::move(prices), free_day);
}

absl::StatusOr<PriceSchedule> PriceSchedule::FromSparse(
    Dollars license_cost, Day horizon,
    const std::vector<std::pair<Day, Dollars>>& entries) {
  if (horizon < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("horizon H must be >= 1, got ", horizon));
  }
  std::vector<Dollars> dense;
  std::vector<bool> seen;
  for (const auto& [day, price] : entries) {
    if (day < 1 || day > horizon) {
      return absl::InvalidArgumentError(
          absl::StrCat("day ", day, " outside [1, ", horizon, "]"));
    }
    if (static_cast<Day>(dense.size()) < day) {
      dense.resize(day, license_cost);
      seen.resize(day, false);
    }
    if (seen[day - 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("day ", day, " listed twice"));
    }
    seen[day - 1] = true;
    dense[day - 1] = price;
  }
  return Create(license_cost, horizon, std::move(dense));
}

absl::StatusOr<PriceSchedule> PriceSchedule::SinglePledge(Dollars license_cost,
                                                          Day purchase_day,
                                                          Dollars pledge) {
  if (purchase_day < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("purchase day must be >= 1, got ", purchase_day));
  }
  return FromSparse(license_cost, purchase_day, {{purchase_day, pledge}});
}

Dollars PriceSchedule::price(Day d) const {
  assert(HasDay(d));
  if (d <= static_cast<Day>(prices_.size())) return prices_[d - 1];
  return license_cost_;
}

Day PriceSchedule::scan_limit() const {
  if (free_day_) return *free_day_;
  return std::max(horizon_, license_cost_) + 1;
}

std::vector<std::pair<Day, Dollars>> PriceSchedule::SparseEntries() const {
  std::vector<std::pair<Day, Dollars>> out;
  for (size_t i = 0; i < prices_.size(); ++i) {
    if (prices_[i] != license_cost_) out.emplace_back(i + 1, prices_[i]);
  }
  return out;
}

Dollars DerivedCosts::P(Day d) const {
  if (d <= scan_limit) return total_costs[d - 1];
  return d - 1 + license_cost;
}

Dollars DerivedCosts::PrefixMin(Day t) const {
  return prefix_min[std::min(t, scan_limit) - 1];
}

Dollars DerivedCosts::SuffixMin(Day t) const {
  if (t <= scan_limit) return suffix_min[t - 1];
  return P(t);
}

DerivedCosts DeriveCosts(const PriceSchedule& p) {
  DerivedCosts c;
  c.license_cost = p.license_cost();
  c.scan_limit = p.scan_limit();
  const size_t n = static_cast<size_t>(c.scan_limit);
  c.total_costs.resize(n);
  c.prefix_min.resize(n);
  c.suffix_min.resize(n);
  for (Day d = 1; d <= c.scan_limit; ++d) {
    c.total_costs[d - 1] = p.total_cost(d);
    const Dollars price = p.price(d);
    if (price == 1 && !c.first_bargain_day) c.first_bargain_day = d;
    if (price == 0 && !c.first_free_day) c.first_free_day = d;
  }
  c.prefix_min[0] = c.total_costs[0];
  for (size_t i = 1; i < n; ++i) {
    c.prefix_min[i] = std::min(c.prefix_min[i - 1], c.total_costs[i]);
  }
  // Past scan_limit P keeps growing, so the last tabulated day is a valid
  // starting point for the suffix minimum.
  c.suffix_min[n - 1] = c.total_costs[n - 1];
  for (size_t i = n - 1; i-- > 0;) {
    c.suffix_min[i] = std::min(c.total_costs[i], c.suffix_min[i + 1]);
  }
  c.m_star = c.prefix_min[n - 1];
  c.i_star = static_cast<Day>(std::find(c.total_costs.begin(),
                                        c.total_costs.end(), c.m_star) -
                              c.total_costs.begin()) +
             1;
  return c;
}

Dollars OptOffline(const DerivedCosts& costs, Day active_days) {
  assert(active_days >= 1);
  return std::min(active_days, costs.PrefixMin(active_days));
}

Dollars OptOffline(const PriceSchedule& p, Day active_days) {
  return OptOffline(DeriveCosts(p), active_days);
}

}  // namespace skirental
