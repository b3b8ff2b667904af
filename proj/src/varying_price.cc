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

#include "skirental/varying_price.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace skirental {

absl::string_view WitnessCaseName(WitnessCase c) {
  switch (c) {
    case WitnessCase::kFreeDay:
      return "free-day";
    case WitnessCase::kBargainDay:
      return "bargain-day";
    case WitnessCase::kGeneral:
      return "general";
  }
  return "general";
}

SolveResult Solve(const PriceSchedule& p) { return Solve(DeriveCosts(p)); }

SolveResult Solve(const DerivedCosts& c) {
  const Dollars m = c.m_star;
  const bool bargain_on_m =
      m <= c.scan_limit && c.P(m) == m && c.first_bargain_day == m;
  const bool free_after_m = c.first_free_day == m + 1;

  SolveResult out;
  if (bargain_on_m || free_after_m) {
    out.c_opt = 1;
    out.one_competitive = true;
    if (bargain_on_m) {
      out.witness_case = WitnessCase::kBargainDay;
      out.optimal_buy_days.push_back(m);
      if (free_after_m) {
        out.optimal_buy_days.push_back(m + 1);
        out.alternative_wait_day = m + 1;
      }
    } else {
      out.witness_case = WitnessCase::kFreeDay;
      out.optimal_buy_days.push_back(m + 1);
    }
    return out;
  }

  // No free or bargain day up to M_*, so OPT_r = r for r <= M_* and
  // OPT_r = M_* afterwards.
  ExactRatio best = ExactRatio(c.SuffixMin(m), m);
  for (Day r = 1; r <= m; ++r) best = std::min(best, ExactRatio(c.P(r), r));
  for (Day r = 1; r <= m; ++r) {
    if (ExactRatio(c.P(r), r) == best) out.optimal_buy_days.push_back(r);
  }
  if (ExactRatio(c.SuffixMin(m), m) == best) {
    for (Day r = m; r <= c.scan_limit; ++r) {
      if (c.P(r) == c.SuffixMin(m) &&
          (out.optimal_buy_days.empty() || out.optimal_buy_days.back() != r)) {
        out.optimal_buy_days.push_back(r);
      }
    }
  }
  out.c_opt = best;
  out.one_competitive = best == ExactRatio(1);
  out.witness_case = WitnessCase::kGeneral;
  return out;
}

namespace {

// Scan bound on adversarial active times. Past it both the strategy's cost
// and OPT are constant (or, for never-buy, the ratio only grows).
Day ActiveTimeBound(const DerivedCosts& c) {
  return c.scan_limit + c.license_cost;
}

// Running max of cost(T) / OPT(T), compared by cross-multiplication.
template <typename CostFn>
WorstRatio ScanWorst(const DerivedCosts& c, CostFn cost_at) {
  Dollars best_cost = 0;
  Dollars best_opt = 1;
  Day best_t = 0;
  const Day bound = ActiveTimeBound(c);
  for (Day t = 1; t <= bound; ++t) {
    Dollars cost = cost_at(t);
    Dollars opt = OptOffline(c, t);
    // A free first day makes OPT zero: matching it counts as ratio 1, paying
    // anything is unbounded.
    if (opt == 0) {
      if (cost > 0) return WorstRatio{ExactRatio(cost), t, true};
      cost = opt = 1;
    }
    if (best_t == 0 || cost * best_opt > best_cost * opt) {
      best_cost = cost;
      best_opt = opt;
      best_t = t;
    }
  }
  return WorstRatio{ExactRatio(best_cost, best_opt), best_t, false};
}

}  // namespace

WorstRatio WorstRatioPaying(const DerivedCosts& c, Day buy_day, Dollars paid) {
  return ScanWorst(c,
                   [&](Day t) { return t < buy_day ? t : buy_day - 1 + paid; });
}

WorstRatio NeverBuyWorstRatio(const DerivedCosts& c) {
  WorstRatio w = ScanWorst(c, [](Day t) { return t; });
  w.divergent = true;
  return w;
}

absl::StatusOr<WorstRatio> StrategyWorstRatio(const PriceSchedule& p,
                                              std::optional<Day> buy_day) {
  const DerivedCosts c = DeriveCosts(p);
  if (!buy_day) {
    if (p.free_day()) {
      // Never buying means collecting the license on the free day.
      return WorstRatioPaying(c, *p.free_day(), 0);
    }
    return NeverBuyWorstRatio(c);
  }
  if (!p.HasDay(*buy_day)) {
    return absl::InvalidArgumentError(
        absl::StrCat("buy day ", *buy_day, " does not exist (free day ",
                     p.free_day().value_or(0), ")"));
  }
  if (*buy_day > c.scan_limit) {
    // A tail day: same shape as any other day, the table just stops short.
    return ScanWorst(c, [&](Day t) {
      return t < *buy_day ? t : *buy_day - 1 + p.license_cost();
    });
  }
  return WorstRatioPaying(c, *buy_day, p.price(*buy_day));
}

absl::StatusOr<SolveResult> OracleCOpt(const PriceSchedule& p,
                                       Day horizon_bound) {
  const Day bound = horizon_bound > 0 ? horizon_bound : 3 * p.license_cost();
  if (p.horizon() > bound) {
    return absl::InvalidArgumentError(absl::StrCat(
        "oracle horizon bound exceeded: H=", p.horizon(), " > ", bound));
  }
  const DerivedCosts c = DeriveCosts(p);
  // Later tail days are dominated by scan_limit: same OPT, larger cost.
  std::vector<std::pair<Day, WorstRatio>> finite;
  for (Day d = 1; d <= c.scan_limit; ++d) {
    finite.emplace_back(d, WorstRatioPaying(c, d, p.price(d)));
  }
  // Never buying diverges without a free day and coincides with d = f with
  // one, so it never enters the minimum.
  SolveResult out;
  out.c_opt = finite.front().second.ratio;
  for (const auto& [d, w] : finite) out.c_opt = std::min(out.c_opt, w.ratio);
  for (const auto& [d, w] : finite) {
    if (w.ratio == out.c_opt) out.optimal_buy_days.push_back(d);
  }
  out.one_competitive = out.c_opt == ExactRatio(1);
  out.witness_case = WitnessCase::kGeneral;
  if (out.one_competitive) {
    const Day first = out.optimal_buy_days.front();
    out.witness_case =
        p.price(first) == 0 ? WitnessCase::kFreeDay : WitnessCase::kBargainDay;
    if (out.optimal_buy_days.size() > 1) {
      out.alternative_wait_day = out.optimal_buy_days.back();
    }
  }
  return out;
}

}  // namespace skirental
