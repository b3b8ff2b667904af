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

// Ski rental with known varying prices: renting costs 1 per day, buying on
// day i costs p_i, and P_i = i - 1 + p_i is the total paid when buying on
// day i. Days past the explicit horizon cost the full license price B.

#ifndef SKIRENTAL_PRICE_SCHEDULE_H_
#define SKIRENTAL_PRICE_SCHEDULE_H_

#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "skirental/rational.h"

namespace skirental {

class PriceSchedule {
 public:
  // `prices[d - 1]` is the buying price on day d; days after prices.size()
  // (up to and past the horizon) cost `license_cost`. The sequence is cut
  // right after its first zero: nothing follows a free day.
  static absl::StatusOr<PriceSchedule> Create(Dollars license_cost, Day horizon,
                                              std::vector<Dollars> prices);

  // Same, from (day, price) pairs; omitted days default to `license_cost`.
  static absl::StatusOr<PriceSchedule> FromSparse(
      Dollars license_cost, Day horizon,
      const std::vector<std::pair<Day, Dollars>>& entries);

  // p_r = pledge, p_j = B elsewhere: what a coalition member sees when the
  // others cover B - pledge on day r.
  static absl::StatusOr<PriceSchedule> SinglePledge(Dollars license_cost,
                                                    Day purchase_day,
                                                    Dollars pledge);

  Dollars license_cost() const { return license_cost_; }
  Day horizon() const { return horizon_; }
  std::optional<Day> free_day() const { return free_day_; }

  // True iff the day exists, i.e. it is not after the first free day.
  bool HasDay(Day d) const { return d >= 1 && (!free_day_ || d <= *free_day_); }

  // Requires HasDay(d).
  Dollars price(Day d) const;
  Dollars total_cost(Day d) const { return d - 1 + price(d); }

  // Last day any exhaustive scan has to look at: the free day if there is
  // one, otherwise max(H, B) + 1. Past it the schedule is the constant-B tail
  // and P grows by one per day.
  Day scan_limit() const;

  // Explicit days whose price differs from B, in day order.
  std::vector<std::pair<Day, Dollars>> SparseEntries() const;

  friend bool operator==(const PriceSchedule&, const PriceSchedule&) = default;

 private:
  PriceSchedule(Dollars b, Day h, std::vector<Dollars> prices,
                std::optional<Day> free_day)
      : license_cost_(b),
        horizon_(h),
        prices_(std::move(prices)),
        free_day_(free_day) {}

  Dollars license_cost_;
  Day horizon_;
  std::vector<Dollars> prices_;
  std::optional<Day> free_day_;
};

// Quantities derived from a schedule, tabulated on days 1..scan_limit().
struct DerivedCosts {
  Dollars license_cost = 0;
  Day scan_limit = 0;
  std::vector<Dollars> total_costs;  // P_d at index d - 1.
  std::vector<Dollars> prefix_min;   // M_t = min(P_1..P_t) at index t - 1.
  std::vector<Dollars> suffix_min;   // Q_t = min(P_t, P_{t+1}, ...).
  Dollars m_star = 0;                // M_*(p)
  Day i_star = 0;                    // first day with P = M_*(p)
  std::optional<Day> first_free_day;
  std::optional<Day> first_bargain_day;

  // These accept any existing day, including tail days past scan_limit.
  Dollars P(Day d) const;
  Dollars PrefixMin(Day t) const;
  Dollars SuffixMin(Day t) const;
};

DerivedCosts DeriveCosts(const PriceSchedule& p);

// Offline optimum for an agent active `active_days` days: rent throughout,
// or rent and buy once on some day it is still active.
// min(T, min over i <= T of P_i).
Dollars OptOffline(const DerivedCosts& costs, Day active_days);
Dollars OptOffline(const PriceSchedule& p, Day active_days);

}  // namespace skirental

#endif  // SKIRENTAL_PRICE_SCHEDULE_H_
