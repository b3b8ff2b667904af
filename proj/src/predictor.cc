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

#include "skirental/predictor.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"
#include "skirental/equilibria.h"
#include "skirental/varying_price.h"

namespace skirental {

absl::StatusOr<AlgParams> AlgParams::Create(ExactRatio lambda) {
  if (lambda <= 0 || lambda > 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "lambda must lie in (0, 1], got ", FormatFraction(lambda)));
  }
  return AlgParams{lambda};
}

absl::string_view BranchName(Branch b) {
  return b == Branch::kPredictionLarge ? "prediction-large"
                                       : "prediction-small";
}

Day StartDay(const DerivedCosts& c) {
  if (c.first_free_day && *c.first_free_day == c.m_star + 1) {
    return c.m_star + 1;
  }
  return c.i_star;
}

Dollars PredictionThreshold(const DerivedCosts& c, Day predicted) {
  return c.PrefixMin(predicted);
}

namespace {

Day ComputeR2(const DerivedCosts& c, const ExactRatio& lambda, Day r0, Day r1) {
  const Day lo = Ceil((1 - lambda) * (r0 - 1) + lambda * r1);
  // P_t - lambda OPT_t increases strictly past scan_limit (OPT is frozen at
  // M_*), so the minimum sits in [lo, max(lo, scan_limit)].
  Day hi = std::max(lo, c.scan_limit);
  if (c.first_free_day) hi = std::min(hi, *c.first_free_day);
  const std::int64_t num = lambda.numerator();
  const std::int64_t den = lambda.denominator();
  Day best = lo;
  std::int64_t best_val = den * c.P(lo) - num * OptOffline(c, lo);
  for (Day t = lo + 1; t <= hi; ++t) {
    const std::int64_t val = den * c.P(t) - num * OptOffline(c, t);
    if (val < best_val) {
      best_val = val;
      best = t;
    }
  }
  if (c.P(best) > c.P(r1)) return r1;
  return best;
}

Day ComputeR3(const DerivedCosts& c, const ExactRatio& bound) {
  std::optional<Day> best;
  ExactRatio best_ratio;
  for (Day t = 1; t <= c.scan_limit; ++t) {
    // OPT_t = 0 only on a free first day, where P_t = 0 too.
    const Dollars opt = OptOffline(c, t);
    if (opt > 0 && ExactRatio(c.P(t), opt) > bound) continue;
    const ExactRatio ratio(c.P(t), t);
    if (!best || ratio < best_ratio) {
      best = t;
      best_ratio = ratio;
    }
  }
  if (!c.first_free_day) {
    // Tail days t > scan_limit have P_t = t - 1 + B and OPT_t = M_*, and
    // P_t / t falls with t: only the last admissible one matters.
    const Day tail = Floor(bound * c.m_star) + 1 - c.license_cost;
    if (tail > c.scan_limit) {
      const ExactRatio ratio(c.P(tail), tail);
      if (!best || ratio < best_ratio) best = tail;
    }
  }
  // Day r1 always satisfies the condition, so `best` is set.
  return *best;
}

}  // namespace

AlgDecision ComputeDays(const PriceSchedule& p, const AlgParams& params) {
  return PredictionAlgorithm(p, params).decision();
}

PredictionAlgorithm::PredictionAlgorithm(const PriceSchedule& p,
                                         AlgParams params)
    : params_(params), costs_(DeriveCosts(p)) {
  const SolveResult solved = Solve(costs_);
  c_opt_ = solved.c_opt;
  decision_.i_star = costs_.i_star;
  decision_.r0 = StartDay(costs_);
  decision_.r1 = solved.optimal_buy_days.front();
  decision_.r2 = ComputeR2(costs_, params_.lambda, decision_.r0, decision_.r1);
  decision_.r3 = ComputeR3(costs_, RobustnessBound(c_opt_, params_));
}

PredictionOutcome PredictionAlgorithm::Run(Day active, Day predicted) const {
  PredictionOutcome out;
  out.days = decision_;
  out.branch = predicted >= PredictionThreshold(costs_, predicted)
                   ? Branch::kPredictionLarge
                   : Branch::kPredictionSmall;
  const Day buy =
      out.branch == Branch::kPredictionLarge ? decision_.r2 : decision_.r3;
  if (buy <= active) {
    out.buy_day_taken = buy;
    out.cost = costs_.P(buy);
  } else {
    out.cost = active;
  }
  out.opt = OptOffline(costs_, active);
  // OPT is zero only with a free first day, which every rule then buys on.
  out.ratio = out.opt == 0 ? ExactRatio(1) : ExactRatio(out.cost, out.opt);
  return out;
}

absl::StatusOr<PredictionOutcome> RunPrediction(const PriceSchedule& p,
                                                const AlgParams& params,
                                                Day active, Day predicted) {
  if (active < 1 || predicted < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("active and predicted days must be >= 1, got T=", active,
                     " That=", predicted));
  }
  if (params.lambda <= 0 || params.lambda > 1) {
    return absl::InvalidArgumentError("lambda must lie in (0, 1]");
  }
  return PredictionAlgorithm(p, params).Run(active, predicted);
}

ExactRatio RobustnessBound(const ExactRatio& c_opt, const AlgParams& params) {
  return params.lambda - 1 + c_opt / params.lambda;
}

ExactRatio RobustnessBound(const PriceSchedule& p, const AlgParams& params) {
  return RobustnessBound(Solve(p).c_opt, params);
}

ClosedFormDays EquilibriumClosedForm(Day r, Dollars w, Dollars b,
                                     const ExactRatio& lambda) {
  ClosedFormDays out;
  if (r == 1) {
    out.m_star = w;
    out.c_opt = w;
    out.r1 = 1;
    out.r2 = 1;
    out.r3 = 1;
    if (w >= 2 &&
        w * (lambda - 2 + ExactRatio(w) / lambda) >= ExactRatio(b - 1)) {
      out.r3 = 1 - b + Floor(w * (lambda - 1 + ExactRatio(w) / lambda));
    }
    return out;
  }
  out.m_star = std::min(b, r - 1 + w);
  out.r1 = r;
  const Day ceil_lr = Ceil(lambda * r);
  out.r2 = b + ceil_lr - 1 < r - 1 + w ? ceil_lr : r;
  if (r <= out.m_star) {
    out.c_opt = 1 + ExactRatio(w - 1, r);
    const ExactRatio x =
        ExactRatio(w - 1, r) / lambda + (lambda - 1) * (lambda - 1) / lambda;
    if (out.m_star * x <= ExactRatio(b - 1)) {
      out.r3 = r;
    } else {
      out.r3 = 1 - b + Floor(out.m_star * (lambda - 1 + out.c_opt / lambda));
    }
  } else {
    out.c_opt = ExactRatio(r + w - 1, b);
  }
  return out;
}

absl::string_view BetaRowName(BetaRow row) {
  switch (row) {
    case BetaRow::kFirstDayUnit:
      return "r=1: 1";
    case BetaRow::kFirstDayPledge:
      return "r=1: w";
    case BetaRow::kEarlyMax:
      return "2<=r<=M*: 1+max((ceil(lr)-1)/B,(w-1)/r)";
    case BetaRow::kEarlyCeil:
      return "2<=r<=M*: 1+(ceil(lr)-1)/B";
    case BetaRow::kEarlyPledge:
      return "2<=r<=M*: 1+(w-1)/r";
    case BetaRow::kEarlyUnit:
      return "2<=r<=M*: 1";
    case BetaRow::kLateCeil:
      return "M*<r: 1+(ceil(lr)-1)/B";
    case BetaRow::kLateFull:
      return "M*<r: (r+w-1)/B";
    case BetaRow::kEarlyUncovered:
      return "2<=r<=M*: max(P_r2/M*, P_r3/r3)";
  }
  return "";
}

absl::StatusOr<BetaResult> BetaTable(Day r, Dollars w, Dollars b,
                                     const ExactRatio& lambda) {
  if (lambda <= 0 || lambda > 1) {
    return absl::InvalidArgumentError("lambda must lie in (0, 1]");
  }
  if (b < 2 || r < 1 || r > 2 * b - 1 || w < 1 || w > b ||
      !PledgerInequalityHolds(b, r, w)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "(r=", r, ", w=", w, ") is not a coalition equilibrium for B=", b));
  }
  BetaResult out;
  out.m_star = r == 1 ? w : std::min(b, r - 1 + w);
  const Dollars m = out.m_star;
  const Day ceil_lr = Ceil(lambda * r);
  const ExactRatio x =
      ExactRatio(w - 1, r) / lambda + (lambda - 1) * (lambda - 1) / lambda;
  const ExactRatio ceil_term = 1 + ExactRatio(ceil_lr - 1, b);
  const ExactRatio pledge_term = 1 + ExactRatio(w - 1, r);

  struct Row {
    BetaRow row;
    bool holds;
    ExactRatio beta;
  };
  std::vector<Row> rows;
  auto add = [&](BetaRow row, std::string label, bool holds, ExactRatio beta) {
    out.conditions_evaluated.emplace_back(std::move(label), holds);
    rows.push_back({row, holds, beta});
  };

  if (r == 1) {
    const ExactRatio t = ExactRatio(w * (w - 1), b - 1);
    add(BetaRow::kFirstDayUnit, "w=1 or lambda<=w(w-1)/(B-1)",
        w == 1 || lambda <= t, 1);
    add(BetaRow::kFirstDayPledge, "w>=2 and lambda>w(w-1)/(B-1)",
        w >= 2 && lambda > t, w);
  } else if (r <= m) {
    const bool ceil_cheap = b + ceil_lr - 1 < r + w - 1;
    const bool small_pledge = r + w - 1 <= b;
    add(BetaRow::kEarlyMax, "X<=1-1/B and B+ceil(lr)-1<r+w-1",
        x <= 1 - ExactRatio(1, b) && ceil_cheap,
        std::max(ceil_term, pledge_term));
    add(BetaRow::kEarlyCeil, "B+ceil(lr)-1<r+w-1 and X>1-1/B",
        ceil_cheap && x > 1 - ExactRatio(1, b), ceil_term);
    add(BetaRow::kEarlyPledge, "X<=1-1/M* and r+w-1<=B",
        x <= 1 - ExactRatio(1, m) && small_pledge, pledge_term);
    add(BetaRow::kEarlyUnit, "M*X>B-1 and r+w-1<=B",
        m * x > ExactRatio(b - 1) && small_pledge, 1);
    // Fallback straight from the per-schedule bound
    // max(P_r2 / M_*, P_r3 / r3 when r3 <= M_*).
    const ClosedFormDays days = EquilibriumClosedForm(r, w, b, lambda);
    auto total = [&](Day d) { return d == r ? r - 1 + w : d - 1 + b; };
    ExactRatio beta(total(days.r2), m);
    if (days.r3 && *days.r3 <= m) {
      beta = std::max(beta, ExactRatio(total(*days.r3), *days.r3));
    }
    add(BetaRow::kEarlyUncovered, "no earlier row", true, beta);
  } else {
    const bool ceil_cheap = b + ceil_lr - 1 < r + w - 1;
    add(BetaRow::kLateCeil, "B+ceil(lr)-1<r+w-1", ceil_cheap, ceil_term);
    add(BetaRow::kLateFull, "otherwise", !ceil_cheap, ExactRatio(r + w - 1, b));
  }

  bool found = false;
  for (const Row& row : rows) {
    if (!row.holds) continue;
    if (!found) {
      out.row = row.row;
      out.beta = row.beta;
      found = true;
    } else if (row.row != BetaRow::kEarlyUncovered) {
      out.also_matched.push_back(row.row);
    }
  }
  return out;
}

absl::StatusOr<ExactRatio> ImprovementThreshold(Day r, Dollars w, Dollars b) {
  if (b < 2 || r < 1 || r > 2 * b - 1 || w < 1 || w > b ||
      !PledgerInequalityHolds(b, r, w)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "(r=", r, ", w=", w, ") is not a coalition equilibrium for B=", b));
  }
  const Dollars m = r == 1 ? w : std::min(b, r - 1 + w);
  return ExactRatio(m * (w - 1), r * (b - 1));
}

absl::StatusOr<ExactRatio> EmpiricalConsistency(Day r, Dollars w, Dollars b,
                                                const ExactRatio& lambda,
                                                Day max_active) {
  absl::StatusOr<AlgParams> params = AlgParams::Create(lambda);
  if (!params.ok()) return params.status();
  absl::StatusOr<PriceSchedule> p = PriceSchedule::SinglePledge(b, r, w);
  if (!p.ok()) return p.status();
  const Day limit = max_active > 0 ? max_active : 4 * b;
  const PredictionAlgorithm alg(*p, *params);
  ExactRatio worst = 0;
  for (Day t = 1; t <= limit; ++t) {
    worst = std::max(worst, alg.Run(t, t).ratio);
  }
  return worst;
}

}  // namespace skirental
