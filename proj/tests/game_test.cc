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

#include <random>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "skirental/varying_price.h"

namespace skirental {
namespace {

PledgeProfile MakeProfile(
    int n, Dollars b, Day h,
    const std::vector<std::tuple<AgentId, Day, Dollars>>& pledges) {
  absl::StatusOr<PledgeProfile> f = PledgeProfile::Create({n, b, h});
  EXPECT_TRUE(f.ok()) << f.status();
  for (const auto& [agent, day, amount] : pledges) {
    EXPECT_TRUE(f->Set(agent, day, amount).ok());
  }
  return *std::move(f);
}

// Agents 0 and 1 pledge 1 and 2 on day 2, B = 3.
PledgeProfile SmallProfile() {
  return MakeProfile(2, 3, 6, {{0, 2, 1}, {1, 2, 2}});
}

TEST(PledgeProfileTest, RejectsBadInput) {
  EXPECT_FALSE(PledgeProfile::Create({0, 3, 6}).ok());
  EXPECT_FALSE(PledgeProfile::Create({1, 1, 6}).ok());
  EXPECT_FALSE(PledgeProfile::Create({1, 3, 0}).ok());
  PledgeProfile f = SmallProfile();
  EXPECT_FALSE(f.Set(2, 1, 1).ok());
  EXPECT_FALSE(f.Set(0, 7, 1).ok());
  EXPECT_FALSE(f.Set(0, 1, 4).ok());
  EXPECT_FALSE(f.Set(0, 1, -1).ok());
}

TEST(RunGameTest, CoalitionWithFreerider) {
  PledgeProfile f = MakeProfile(3, 100, 200, {{0, 75, 50}, {1, 75, 50}});
  const std::vector<Day> t = {75, 75, 75};
  absl::StatusOr<RunOutcome> out = RunGame(f, t);
  ASSERT_TRUE(out.ok());
  ASSERT_TRUE(out->purchase_day.has_value());
  EXPECT_EQ(*out->purchase_day, 75);
  EXPECT_EQ(out->cost, (std::vector<Dollars>{124, 124, 74}));
  EXPECT_EQ(out->ratio[0], ExactRatio(124, 75));
  EXPECT_EQ(out->ratio[1], ExactRatio(124, 75));
  EXPECT_EQ(out->ratio[2], ExactRatio(1));
}

TEST(RunGameTest, NoPledgesMeansRenting) {
  PledgeProfile f = MakeProfile(2, 100, 200, {});
  const std::vector<Day> t = {50, 50};
  absl::StatusOr<RunOutcome> out = RunGame(f, t);
  ASSERT_TRUE(out.ok());
  EXPECT_FALSE(out->purchase_day.has_value());
  EXPECT_EQ(out->cost, (std::vector<Dollars>{50, 50}));
  EXPECT_EQ(out->ratio[0], ExactRatio(1));
  EXPECT_EQ(out->ratio[1], ExactRatio(1));
}

TEST(RunGameTest, SmallProfile) {
  const std::vector<Day> t = {2, 2};
  absl::StatusOr<RunOutcome> out = RunGame(SmallProfile(), t);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out->purchase_day, 2);
  EXPECT_EQ(out->cost, (std::vector<Dollars>{2, 3}));
  EXPECT_EQ(out->ratio[0], ExactRatio(1));
  EXPECT_EQ(out->ratio[1], ExactRatio(3, 2));
}

TEST(RunGameTest, InactiveAgentsDoNotPledge) {
  const std::vector<Day> t = {1, 5};
  absl::StatusOr<RunOutcome> out = RunGame(SmallProfile(), t);
  ASSERT_TRUE(out.ok());
  EXPECT_FALSE(out->purchase_day.has_value());
  EXPECT_EQ(out->cost, (std::vector<Dollars>{1, 5}));
}

TEST(RunGameTest, RejectsBadActiveTimes) {
  const std::vector<Day> short_t = {2};
  EXPECT_FALSE(RunGame(SmallProfile(), short_t).ok());
  const std::vector<Day> zero_t = {0, 2};
  EXPECT_FALSE(RunGame(SmallProfile(), zero_t).ok());
}

TEST(InducedPricesTest, Examples) {
  PriceSchedule p = InducedPrices(MakeProfile(2, 3, 6, {{1, 2, 2}}), 0);
  EXPECT_EQ(p.price(1), 3);
  EXPECT_EQ(p.price(2), 1);
  EXPECT_EQ(p.price(3), 3);

  PriceSchedule flat = InducedPrices(MakeProfile(2, 3, 6, {}), 0);
  for (Day d = 1; d <= 10; ++d) EXPECT_EQ(flat.price(d), 3);

  PriceSchedule coalition =
      InducedPrices(MakeProfile(3, 100, 200, {{0, 75, 30}, {1, 75, 70}}), 0);
  EXPECT_EQ(coalition.price(75), 30);
  EXPECT_EQ(coalition.price(74), 100);
  EXPECT_EQ(coalition.price(76), 100);
}

TEST(InducedPricesTest, OverpledgeIsFreeDay) {
  PriceSchedule p = InducedPrices(MakeProfile(3, 3, 6, {{1, 4, 3}}), 0);
  ASSERT_TRUE(p.free_day().has_value());
  EXPECT_EQ(*p.free_day(), 4);
}

TEST(ZValueTest, Examples) {
  EXPECT_EQ(ZValue(MakeProfile(2, 3, 6, {}), 0), 3);
  EXPECT_EQ(ZValue(MakeProfile(2, 3, 6, {{1, 2, 2}}), 0), 2);
  EXPECT_EQ(ZValue(MakeProfile(2, 3, 6, {{0, 2, 1}}), 1), 3);
}

PledgeProfile RandomProfile(std::mt19937_64& rng, int n, Dollars b, Day h) {
  PledgeProfile f = *PledgeProfile::Create({n, b, h});
  std::uniform_int_distribution<Dollars> amount(0, b);
  std::uniform_int_distribution<Day> day(1, h);
  std::uniform_int_distribution<int> count(0, 3);
  for (AgentId i = 0; i < n; ++i) {
    for (int k = count(rng); k > 0; --k) {
      EXPECT_TRUE(f.Set(i, day(rng), amount(rng)).ok());
    }
  }
  return f;
}

TEST(GameProperty, ZValueMatchesInducedMinimum) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 3000; ++iter) {
    const Dollars b = std::uniform_int_distribution<Dollars>(2, 8)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    PledgeProfile f = RandomProfile(rng, n, b, 2 * b);
    for (AgentId i = 0; i < n; ++i) {
      ASSERT_EQ(ZValue(f, i), DeriveCosts(InducedPrices(f, i)).m_star);
    }
  }
}

TEST(GameProperty, MorePledgeNeverDelaysPurchase) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 3000; ++iter) {
    const Dollars b = std::uniform_int_distribution<Dollars>(2, 8)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    PledgeProfile f = RandomProfile(rng, n, b, 2 * b);
    std::optional<Day> r = f.PurchaseDay();
    if (!r) continue;
    const AgentId i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (f.pledge(i, *r) == b) continue;
    PledgeProfile g = f;
    ASSERT_TRUE(g.Set(i, *r, f.pledge(i, *r) + 1).ok());
    ASSERT_TRUE(g.PurchaseDay().has_value());
    ASSERT_LE(*g.PurchaseDay(), *r);
  }
}

TEST(GameProperty, RealizedRatioWithinStrategyWorstCase) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 1000; ++iter) {
    const Dollars b = std::uniform_int_distribution<Dollars>(2, 6)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const Day h = 2 * b;
    PledgeProfile f = RandomProfile(rng, n, b, h);
    const std::optional<Day> r = f.PurchaseDay();
    for (AgentId i = 0; i < n; ++i) {
      // Everyone else outlasts the horizon so the induced schedule applies.
      std::vector<Day> t(n, 4 * h);
      const DerivedCosts costs = DeriveCosts(InducedPrices(f, i));
      const WorstRatio worst = r ? WorstRatioPaying(costs, *r, f.pledge(i, *r))
                                 : NeverBuyWorstRatio(costs);
      for (t[i] = 1; t[i] <= 3 * h; ++t[i]) {
        absl::StatusOr<RunOutcome> out = RunGame(f, t);
        ASSERT_TRUE(out.ok());
        ASSERT_GE(out->ratio[i], ExactRatio(1));
        if (!worst.divergent) ASSERT_LE(out->ratio[i], worst.ratio);
      }
    }
  }
}

}  // namespace
}  // namespace skirental
