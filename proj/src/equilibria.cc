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

#include "skirental/equilibria.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace skirental {

absl::string_view ConditionTag(EqCondition c) {
  switch (c) {
    case EqCondition::kPurchase:
      return "i";
    case EqCondition::kFreeDay:
      return "ii";
    case EqCondition::kBargainDay:
      return "iii";
    case EqCondition::kOtherDays:
      return "iv";
    case EqCondition::kPledgerInequality:
      return "pledger";
  }
  return "?";
}

absl::string_view RoleName(AgentRole r) {
  switch (r) {
    case AgentRole::kFreeDay:
      return "free-day";
    case AgentRole::kBargainDay:
      return "bargain-day";
    case AgentRole::kGeneral:
      return "general";
    case AgentRole::kPledger:
      return "pledger";
    case AgentRole::kFreerider:
      return "freerider";
  }
  return "?";
}

namespace {

EqVerdict Reject(EqVerdict v, EqCondition c, std::optional<AgentId> agent) {
  v.is_equilibrium = false;
  v.failing_condition = c;
  v.failing_agent = agent;
  return v;
}

// (f_i(r) + r - 1) / min(r, Z_i), the ratio of an agent that buys on r with
// no free or bargain day of its own.
ExactRatio GeneralAgentRatio(const PledgeProfile& f, AgentId i, Day r,
                             Dollars z) {
  return ExactRatio(f.pledge(i, r) + r - 1,
                    std::max<Dollars>(std::min(r, z), 1));
}

// Condition (iv) on one day j != r:
// sum_{k != i} f_k(j) <= B + j - 1 - min(j, Z) (f_i(r) + r - 1) / min(r, Z).
bool OtherDayInequality(const PledgeProfile& f, AgentId i, Day r, Dollars z,
                        Day j) {
  const Dollars b = f.config().license_cost;
  const Dollars den = std::max<Dollars>(std::min(r, z), 1);
  const Dollars lhs = (f.TotalExcept(i, j) - b - j + 1) * den;
  const Dollars rhs = -std::min(j, z) * (f.pledge(i, r) + r - 1);
  return lhs <= rhs;
}

}  // namespace

absl::StatusOr<EqVerdict> CheckPredictionless(const PledgeProfile& f) {
  const GameConfig& cfg = f.config();
  const Dollars b = cfg.license_cost;
  if (cfg.horizon < 2 * b) {
    return absl::InvalidArgumentError(absl::StrCat(
        "predictionless check needs H >= 2B, got H=", cfg.horizon, " B=", b));
  }
  EqVerdict v;
  v.purchase_day = f.PurchaseDay();
  if (!v.purchase_day) return Reject(v, EqCondition::kPurchase, std::nullopt);
  const Day r = *v.purchase_day;
  if (f.Total(r) != b) return Reject(v, EqCondition::kPurchase, std::nullopt);

  v.roles.resize(cfg.n, AgentRole::kGeneral);
  v.ratios.resize(cfg.n, ExactRatio(1));
  for (AgentId i = 0; i < cfg.n; ++i) {
    const Dollars z = ZValue(f, i);
    const Dollars own = f.pledge(i, r);
    const bool free_hyp = f.TotalExcept(i, r) == b && r <= z + 1;
    std::optional<Day> bargain;
    for (Day k = 1; k <= std::min(r, z); ++k) {
      if (f.TotalExcept(i, k) == b - 1) {
        bargain = k;
        break;
      }
    }
    if (free_hyp) {
      v.roles[i] = AgentRole::kFreeDay;
      if (r != z + 1 || own != 0) return Reject(v, EqCondition::kFreeDay, i);
    }
    if (bargain) {
      const Day k = *bargain;
      const bool buys_on_bargain = k == r && r == z && own == 1;
      const bool waits_for_free = k == z && z == r - 1 &&
                                  f.pledge(i, r - 1) == 0 && own == 0 &&
                                  f.TotalExcept(i, r) == b;
      if (!free_hyp) v.roles[i] = AgentRole::kBargainDay;
      if (!buys_on_bargain && !waits_for_free) {
        return Reject(v, EqCondition::kBargainDay, i);
      }
    }
    if (free_hyp || bargain) continue;
    for (Day j = 1; j <= cfg.horizon; ++j) {
      if (j == r) continue;
      if (!OtherDayInequality(f, i, r, z, j)) {
        return Reject(v, EqCondition::kOtherDays, i);
      }
    }
    v.ratios[i] = GeneralAgentRatio(f, i, r, z);
  }
  v.is_equilibrium = true;
  return v;
}

absl::StatusOr<std::vector<ExactRatio>> PredictionlessRatios(
    const PledgeProfile& f, const EqVerdict& verdict) {
  if (!verdict.is_equilibrium || !verdict.purchase_day) {
    return absl::FailedPreconditionError(
        "closed-form ratios need an accepted equilibrium");
  }
  const Day r = *verdict.purchase_day;
  std::vector<ExactRatio> out;
  for (AgentId i = 0; i < f.config().n; ++i) {
    switch (verdict.roles[i]) {
      case AgentRole::kFreeDay:
      case AgentRole::kBargainDay:
        out.push_back(1);
        break;
      default:
        out.push_back(GeneralAgentRatio(f, i, r, ZValue(f, i)));
    }
  }
  return out;
}

std::vector<AgentId> EquilibriumSpec::PledgerIds() const {
  if (!pledgers.empty()) return pledgers;
  std::vector<AgentId> ids(weights.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

namespace {

absl::Status ValidateSpec(const EquilibriumSpec& spec, bool exact_sum) {
  const Dollars b = spec.license_cost;
  if (b < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("license cost B must be >= 2, got ", b));
  }
  if (spec.r < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("purchase day must be >= 1, got ", spec.r));
  }
  if (spec.weights.empty()) {
    return absl::InvalidArgumentError("coalition has no pledgers");
  }
  const std::vector<AgentId> ids = spec.PledgerIds();
  if (ids.size() != spec.weights.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        ids.size(), " pledger ids for ", spec.weights.size(), " weights"));
  }
  std::vector<bool> seen(spec.n, false);
  for (AgentId a : ids) {
    if (a < 0 || a >= spec.n || seen[a]) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad or repeated pledger id ", a, " for n=", spec.n));
    }
    seen[a] = true;
  }
  Dollars sum = 0;
  for (Dollars w : spec.weights) {
    if (w < 1 || w > b) {
      return absl::InvalidArgumentError(
          absl::StrCat("pledge ", w, " outside [1, ", b, "]"));
    }
    sum += w;
  }
  if (exact_sum && sum != b) {
    return absl::InvalidArgumentError(
        absl::StrCat("pledges sum to ", sum, ", need exactly B=", b));
  }
  if (!exact_sum && sum < b) {
    return absl::InvalidArgumentError(
        absl::StrCat("pledges sum to ", sum, ", need at least B=", b));
  }
  return absl::OkStatus();
}

ExactRatio FreeriderRatio(Dollars b, Day r) {
  return r <= b + 1 ? ExactRatio(1) : ExactRatio(r - 1, b);
}

}  // namespace

bool PledgerInequalityHolds(Dollars b, Day r, Dollars w) {
  if (r <= b) return (w - 1) * std::min(b, r - 1 + w) <= r * (b - 1);
  return r - 1 + w <= 2 * b - 1;
}

absl::StatusOr<EqVerdict> CheckRationalNoSelfPred(const EquilibriumSpec& spec) {
  if (absl::Status s = ValidateSpec(spec, /*exact_sum=*/true); !s.ok()) {
    return s;
  }
  const Dollars b = spec.license_cost;
  if (spec.r > 2 * b - 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("purchase day ", spec.r,
                     " past the last admissible day 2B-1=", 2 * b - 1));
  }
  EqVerdict v;
  v.is_equilibrium = true;
  v.purchase_day = spec.r;
  v.roles.assign(spec.n, AgentRole::kFreerider);
  v.ratios.assign(spec.n, FreeriderRatio(b, spec.r));
  const std::vector<AgentId> ids = spec.PledgerIds();
  for (size_t k = 0; k < ids.size(); ++k) {
    const Dollars w = spec.weights[k];
    v.roles[ids[k]] = AgentRole::kPledger;
    v.ratios[ids[k]] = spec.r <= b ? 1 + ExactRatio(w - 1, spec.r)
                                   : ExactRatio(spec.r + w - 1, b);
    if (v.is_equilibrium && !PledgerInequalityHolds(b, spec.r, w)) {
      v.is_equilibrium = false;
      v.failing_condition = EqCondition::kPledgerInequality;
      v.failing_agent = ids[k];
    }
  }
  return v;
}

absl::StatusOr<PledgeProfile> ToProfile(const EquilibriumSpec& spec,
                                        Day horizon) {
  if (absl::Status s = ValidateSpec(spec, /*exact_sum=*/false); !s.ok()) {
    return s;
  }
  GameConfig cfg{spec.n, spec.license_cost,
                 horizon > 0 ? horizon : 2 * spec.license_cost};
  if (spec.r > cfg.horizon) {
    return absl::InvalidArgumentError(
        absl::StrCat("purchase day ", spec.r, " past horizon ", cfg.horizon));
  }
  absl::StatusOr<PledgeProfile> f = PledgeProfile::Create(cfg);
  if (!f.ok()) return f.status();
  const std::vector<AgentId> ids = spec.PledgerIds();
  for (size_t k = 0; k < ids.size(); ++k) {
    if (absl::Status s = f->Set(ids[k], spec.r, spec.weights[k]); !s.ok()) {
      return s;
    }
  }
  return f;
}

namespace {

void Compositions(Dollars remaining, int parts_left,
                  std::vector<Dollars>& prefix,
                  std::vector<std::vector<Dollars>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  for (Dollars w = 1; w <= remaining; ++w) {
    prefix.push_back(w);
    Compositions(remaining - w, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

absl::StatusOr<std::vector<EquilibriumSpec>> EnumerateRationalEq(
    Dollars b, int n, Day r_min, Day r_max, const EnumerationOptions& options) {
  if (b < 2 || b > options.max_license_cost) {
    return absl::InvalidArgumentError(absl::StrCat(
        "enumeration needs 2 <= B <= ", options.max_license_cost, ", got ", b));
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least one agent, got n=", n));
  }
  std::vector<std::vector<Dollars>> comps;
  std::vector<Dollars> prefix;
  Compositions(b, std::min<Dollars>(n, b), prefix, comps);
  std::sort(comps.begin(), comps.end());

  std::vector<EquilibriumSpec> out;
  for (Day r = std::max<Day>(r_min, 1); r <= std::min(r_max, 2 * b - 1); ++r) {
    for (const std::vector<Dollars>& w : comps) {
      EquilibriumSpec spec{b, n, r, w, {}};
      absl::StatusOr<EqVerdict> v = CheckRationalNoSelfPred(spec);
      if (!v.ok()) return v.status();
      if (!v->is_equilibrium) continue;
      if (out.size() >= options.max_specs) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "more than ", options.max_specs, " equilibria; raise the cap"));
      }
      out.push_back(std::move(spec));
    }
  }
  return out;
}

WorstRatio CurrentRatio(const PledgeProfile& f, AgentId agent) {
  const DerivedCosts costs = DeriveCosts(InducedPrices(f, agent));
  const std::optional<Day> r = f.PurchaseDay();
  if (!r) {
    // No purchase means no free day either.
    return NeverBuyWorstRatio(costs);
  }
  return WorstRatioPaying(costs, *r, f.pledge(agent, *r));
}

absl::StatusOr<ExactRatio> DeviationOracle(const PledgeProfile& f,
                                           AgentId agent, Day horizon_bound) {
  if (agent < 0 || agent >= f.config().n) {
    return absl::InvalidArgumentError(absl::StrCat("no agent ", agent));
  }
  absl::StatusOr<SolveResult> best =
      OracleCOpt(InducedPrices(f, agent), horizon_bound);
  if (!best.ok()) return best.status();
  return best->c_opt;
}

absl::StatusOr<Certificate> CertifyProfile(const PledgeProfile& f,
                                           Day horizon_bound) {
  Certificate cert;
  cert.certified = true;
  for (AgentId a = 0; a < f.config().n; ++a) {
    absl::StatusOr<ExactRatio> best = DeviationOracle(f, a, horizon_bound);
    if (!best.ok()) return best.status();
    WorstRatio now = CurrentRatio(f, a);
    if (now.divergent || now.ratio > *best) cert.certified = false;
    cert.current.push_back(now);
    cert.best_deviation.push_back(*best);
  }
  return cert;
}

absl::StatusOr<EqVerdict> CheckPredictionEqRun(
    const EquilibriumSpec& spec, const std::vector<Robustness>& lambdas,
    std::optional<Dollars> m_star) {
  if (absl::Status s = ValidateSpec(spec, /*exact_sum=*/false); !s.ok()) {
    return s;
  }
  if (lambdas.size() != spec.weights.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(lambdas.size(), " robustness parameters for ",
                     spec.weights.size(), " pledgers"));
  }
  for (const Robustness& l : lambdas) {
    if (l && *l < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "robustness parameters must be >= 1, got ", FormatFraction(*l)));
    }
  }
  if (m_star && *m_star < 1) {
    return absl::InvalidArgumentError("M_* must be >= 1");
  }
  const Dollars b = spec.license_cost;
  const Day r = spec.r;
  EqVerdict v;
  v.is_equilibrium = true;
  v.purchase_day = r;
  v.roles.assign(spec.n, AgentRole::kFreerider);
  v.ratios.assign(spec.n, FreeriderRatio(b, r));
  const std::vector<AgentId> ids = spec.PledgerIds();
  for (size_t k = 0; k < ids.size(); ++k) {
    const Dollars w = spec.weights[k];
    const Dollars m = m_star.value_or(std::min(b, r - 1 + w));
    bool holds = true;
    if (r <= m) {
      v.ratios[ids[k]] =
          1 + std::min(ExactRatio(b - 1, m), ExactRatio(w - 1, r));
      if (lambdas[k]) {
        const ExactRatio l = *lambdas[k];
        holds =
            ExactRatio(w - 1, r) <= l * ExactRatio(b - 1, m) + l + 1 / l - 2;
      }
    } else {
      v.ratios[ids[k]] = ExactRatio(std::min(m + b - 1, r + w - 1), m);
      if (lambdas[k]) {
        const ExactRatio l = *lambdas[k];
        holds = ExactRatio(r + w - 1) <= l * (2 * b - 1) + (l + 1 / l - 2) * b;
      }
    }
    v.roles[ids[k]] = AgentRole::kPledger;
    if (!holds && v.is_equilibrium) {
      v.is_equilibrium = false;
      v.failing_condition = EqCondition::kPledgerInequality;
      v.failing_agent = ids[k];
    }
  }
  return v;
}

absl::StatusOr<ExactRatio> PurchaseDeadlineBound(
    const std::vector<Robustness>& lambdas, const PriceSchedule& p) {
  std::optional<ExactRatio> smallest;
  for (const Robustness& l : lambdas) {
    if (!l) continue;
    if (*l < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "robustness parameters must be >= 1, got ", FormatFraction(*l)));
    }
    if (!smallest || *l < *smallest) smallest = *l;
  }
  if (!smallest) {
    return absl::OutOfRangeError(
        "unbounded: every robustness parameter is infinite");
  }
  const DerivedCosts costs = DeriveCosts(p);
  const ExactRatio m(costs.m_star);
  const ExactRatio l = *smallest;
  return m * (1 / l - 1) + m * l * Solve(costs).c_opt;
}

std::vector<std::pair<ExactRatio, ExactRatio>> AsPredictionParameters(
    const EqVerdict& verdict) {
  std::vector<std::pair<ExactRatio, ExactRatio>> out;
  for (const ExactRatio& c : verdict.ratios) out.emplace_back(c, c);
  return out;
}

}  // namespace skirental
